#ifndef COXETER_KERNELS_HPP_
#define COXETER_KERNELS_HPP_

// Brute-force kernels in two flavours: a plain serial reference and an
// OpenMP version. Both return identical results (same order, same counts);
// the public API uses the parallel one.

#include <cstdint>
#include <optional>
#include <vector>

#include "coxeter/graph.hpp"
#include "coxeter/oracle.hpp"

namespace coxeter::kernels {

std::vector<Permutation> graph_automorphisms_serial(const CoxeterGraph& g);
std::vector<Permutation> graph_automorphisms_parallel(const CoxeterGraph& g);

std::optional<FiniteGroupTable> enumerate_group_serial(const WordEngine& engine, const GeneratorSet& x,
                                                       std::size_t cap);
std::optional<FiniteGroupTable> enumerate_group_parallel(const WordEngine& engine, const GeneratorSet& x,
                                                         std::size_t cap);

std::uint64_t hom_count_serial(const CoxeterGraph& g, const GeneratorSet& domain, unsigned r);
std::uint64_t hom_count_parallel(const CoxeterGraph& g, const GeneratorSet& domain, unsigned r);

// std::nullopt once the search visits more than `budget` nodes; the node
// count of the full search is fixed, so both flavours agree.
std::optional<std::uint64_t> aut_order_serial(const FiniteGroupTable& t, const CoxeterGraph& g,
                                              std::uint64_t budget);
std::optional<std::uint64_t> aut_order_parallel(const FiniteGroupTable& t, const CoxeterGraph& g,
                                                std::uint64_t budget);

}  // namespace coxeter::kernels

#endif  // COXETER_KERNELS_HPP_
