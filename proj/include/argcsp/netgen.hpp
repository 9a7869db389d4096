#pragma once

// Seeded generators for small-world attack graphs and random attack weights.
// Randomness is drawn from std::mt19937_64 raw output through fixed
// reduction formulas, so a seed yields the same graph on every platform.

#include "argcsp/framework.hpp"

#include <cstdint>
#include <stdexcept>
#include <variant>

namespace argcsp {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// How an undirected generated edge becomes attacks.
enum class Orientation { FairCoin, BothDirections };

/// Preferential attachment: a 2-node seed with one attack, then one vertex per
/// step attached to min(edges_per_step, |V|) distinct existing vertices, each
/// picked with probability proportional to degree + 1.
struct BarabasiSpec {
  std::size_t node_count = 10;
  std::size_t edges_per_step = 3;
  std::uint64_t seed = 0;
  Orientation orientation = Orientation::FairCoin;
};

/// side x side toroidal lattice with four local links per node, plus
/// long-range attacks whose target is drawn with probability proportional to
/// d^-theta (d the toroidal Manhattan distance).
struct KleinbergSpec {
  std::size_t side = 5;
  double theta = 0.5;
  std::size_t long_range_per_node = 1;
  std::uint64_t seed = 0;
  Orientation local = Orientation::BothDirections;
};

struct WeightScheme {
  enum Kind { None, IntegerUniform, FuzzyUniform } kind = None;
  /// Upper bound for IntegerUniform.
  std::uint64_t max = 10;
};

struct GenSpec {
  std::variant<BarabasiSpec, KleinbergSpec> graph;
  WeightScheme weights;
  std::uint64_t weight_seed = 0;
};

Framework gen_barabasi(const BarabasiSpec& spec);
Framework gen_kleinberg(const KleinbergSpec& spec);

/// IntegerUniform draws costs in [1,max] (Weighted semiring); FuzzyUniform
/// draws hundredths in [1,99] (Fuzzy semiring), since 1.00 means no attack.
Framework assign_weights(const Framework& f, const WeightScheme& scheme, std::uint64_t seed);

Framework generate(const GenSpec& spec);

/// The five-argument example graph a..e with attacks a->b 7, c->b 8, c->d 9,
/// d->c 8, d->e 5, e->e 6 (costs in the Weighted semiring).
Framework example_framework(bool weighted = true);

}  // namespace argcsp
