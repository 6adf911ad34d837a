#ifndef COXETER_INSTANCES_HPP_
#define COXETER_INSTANCES_HPP_

// Instance builders shared by the verify command, the tests and the
// benchmarks: seeded random graphs and words, disjoint unions, and the
// standard ten-generator example with one component of each kind plus a
// second affine one.

#include <cstdint>
#include <random>
#include <vector>

#include "coxeter/graph.hpp"

namespace coxeter {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

using Rng = std::mt19937_64;

// Generators renamed s1..sN in order of the parts.
CoxeterGraph disjoint_union(const std::vector<CoxeterGraph>& parts);

// s1-s2 infinite; s3,s4,s5 a triangle of 3s; s6,s7,s8 a triangle of 4s;
// s9-s10 a 3. Generic {s6,s7,s8}, affine {s1,s2} and {s3,s4,s5}, spherical
// {s9,s10}.
CoxeterGraph tripartition_example();
std::string tripartition_example_text();

// Connected graph on `vertices` generators: a random spanning tree with
// bonds drawn from edge_pool (all non-commuting), then every other pair
// drawn from pair_pool (which may contain m = 2).
CoxeterGraph random_connected_graph(Rng& rng, std::size_t vertices, const std::vector<BondValue>& edge_pool,
                                    const std::vector<BondValue>& pair_pool);

// Bonds {3, ..., max_m} plus infinity, and the same with 2 added.
std::vector<BondValue> bond_pool(unsigned max_m, bool with_commuting);

// Disjoint union of random non-spherical components (2 to 4 generators each,
// at most max_infinite_part generators in total) and spherical components
// chosen so that exactly `central` of them have a central longest element.
// Generators are shuffled afterwards.
CoxeterGraph random_graph_with_center_rank(Rng& rng, std::size_t max_infinite_part, std::size_t central);

// Uniform length in [0, max_length], letters uniform from the alphabet.
Word random_word(Rng& rng, const std::vector<Generator>& alphabet, std::size_t max_length);

// Each member of `from` kept with probability 1/2.
GeneratorSet random_subset(Rng& rng, const GeneratorSet& from);

}  // namespace coxeter

#endif  // COXETER_INSTANCES_HPP_
