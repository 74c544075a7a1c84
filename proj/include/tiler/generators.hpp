#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tiler {

// Boundary words (letters R, U, L, D) of standard region families.
std::string gen_rect(int64_t w, int64_t h);
std::string gen_aztec(int64_t order);
// First `cells` cells of a width-one square spiral with one-cell gaps
// between turns; perimeter 2 * cells + 2.
std::string gen_spiral(int64_t cells);
// First `cells` cells of a width-one serpentine with rows of `width` cells.
std::string gen_snake(int64_t cells, int64_t width);
std::string gen_random(int64_t area, uint64_t seed);
// Each cell becomes a k x k block: every letter repeated k times.
std::string dilate(const std::string& word, int64_t k);

// Dispatch by family name: rect w h, aztec k, spiral n, snake n [w], random area.
std::string generate(const std::string& family, const std::vector<int64_t>& params, uint64_t seed);

}  // namespace tiler
