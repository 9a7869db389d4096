#include "argcsp/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace argcsp {

namespace {

// Uniform integer in [0, bound) by rejection; bound > 0.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool coin(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

void orient(std::set<Attack>& out, ArgumentId u, ArgumentId v, Orientation o, std::mt19937_64& rng) {
  if (o == Orientation::BothDirections) {
    out.insert({u, v});
    out.insert({v, u});
  } else if (coin(rng)) {
    out.insert({u, v});
  } else {
    out.insert({v, u});
  }
}

}  // namespace

Framework gen_barabasi(const BarabasiSpec& spec) {
  if (spec.node_count < 2) throw GeneratorError("preferential attachment needs at least 2 nodes");
  if (spec.edges_per_step < 1) throw GeneratorError("edges per step must be at least 1");
  std::mt19937_64 rng(spec.seed);
  std::set<Attack> attacks;
  std::vector<std::uint64_t> degree(spec.node_count, 0);
  orient(attacks, 0, 1, spec.orientation, rng);
  degree[0] = degree[1] = 1;

  for (ArgumentId v = 2; v < spec.node_count; ++v) {
    const std::size_t m = std::min<std::size_t>(spec.edges_per_step, v);
    std::vector<std::uint64_t> w(v);
    std::uint64_t total = 0;
    for (ArgumentId u = 0; u < v; ++u) {
      w[u] = degree[u] + 1;
      total += w[u];
    }
    std::vector<ArgumentId> picked;
    for (std::size_t k = 0; k < m; ++k) {
      std::uint64_t r = below(rng, total);
      ArgumentId u = 0;
      while (r >= w[u]) r -= w[u++];
      picked.push_back(u);
      total -= w[u];
      w[u] = 0;
    }
    for (ArgumentId u : picked) {
      orient(attacks, u, v, spec.orientation, rng);
      ++degree[u];
      ++degree[v];
    }
  }
  return Framework(spec.node_count, std::vector<Attack>(attacks.begin(), attacks.end()));
}

Framework gen_kleinberg(const KleinbergSpec& spec) {
  const std::size_t n = spec.side;
  if (n < 2) throw GeneratorError("lattice side must be at least 2");
  if (!(spec.theta > 0.0)) throw GeneratorError("clustering exponent must be positive");
  std::mt19937_64 rng(spec.seed);
  const std::size_t count = n * n;
  auto id = [n](std::size_t r, std::size_t c) { return static_cast<ArgumentId>(r * n + c); };

  std::set<Attack> attacks;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      ArgumentId u = id(r, c);
      // Right and down links; with the wrap-around this covers all four neighbours.
      for (ArgumentId v : {id(r, (c + 1) % n), id((r + 1) % n, c)}) {
        if (v == u || attacks.count({u, v}) || attacks.count({v, u})) continue;
        orient(attacks, u, v, spec.local, rng);
      }
    }
  }

  auto dist = [n](std::size_t a, std::size_t b) {
    std::size_t dr = a / n > b / n ? a / n - b / n : b / n - a / n;
    std::size_t dc = a % n > b % n ? a % n - b % n : b % n - a % n;
    return std::min(dr, n - dr) + std::min(dc, n - dc);
  };
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t k = 0; k < spec.long_range_per_node; ++k) {
      std::vector<double> w(count, 0.0);
      double total = 0.0;
      for (std::size_t v = 0; v < count; ++v) {
        if (v == u || attacks.count({static_cast<ArgumentId>(u), static_cast<ArgumentId>(v)})) continue;
        w[v] = std::pow(static_cast<double>(dist(u, v)), -spec.theta);
        total += w[v];
      }
      if (total <= 0.0) break;
      double r = unit(rng) * total;
      std::size_t v = 0;
      std::size_t last = 0;
      for (; v < count; ++v) {
        if (w[v] == 0.0) continue;
        last = v;
        if (r < w[v]) break;
        r -= w[v];
      }
      if (v == count) v = last;
      attacks.insert({static_cast<ArgumentId>(u), static_cast<ArgumentId>(v)});
    }
  }
  return Framework(count, std::vector<Attack>(attacks.begin(), attacks.end()));
}

Framework assign_weights(const Framework& f, const WeightScheme& scheme, std::uint64_t seed) {
  if (f.is_weighted()) throw GeneratorError("framework is already weighted");
  std::mt19937_64 rng(seed);
  std::vector<SemiringValue> w;
  switch (scheme.kind) {
    case WeightScheme::None: return f;
    case WeightScheme::IntegerUniform:
      if (scheme.max < 1) throw GeneratorError("maximum weight must be at least 1");
      for (std::size_t i = 0; i < f.attacks().size(); ++i) w.push_back(SemiringValue::cost(below(rng, scheme.max) + 1));
      return f.with_weights(std::move(w), make_instance(SemiringKind::Weighted));
    case WeightScheme::FuzzyUniform:
      for (std::size_t i = 0; i < f.attacks().size(); ++i) {
        w.push_back(SemiringValue::hundredths(static_cast<int>(below(rng, 99)) + 1));
      }
      return f.with_weights(std::move(w), make_instance(SemiringKind::Fuzzy));
  }
  return f;
}

Framework generate(const GenSpec& spec) {
  Framework f = std::visit(
      [](const auto& g) {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, BarabasiSpec>) {
          return gen_barabasi(g);
        } else {
          return gen_kleinberg(g);
        }
      },
      spec.graph);
  return assign_weights(f, spec.weights, spec.weight_seed);
}

Framework example_framework(bool weighted) {
  std::vector<Attack> attacks{{0, 1}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 4}};
  std::vector<std::string> names{"a", "b", "c", "d", "e"};
  if (!weighted) return Framework(5, std::move(attacks), std::move(names));
  std::vector<SemiringValue> w;
  for (std::uint64_t c : {7, 8, 9, 8, 5, 6}) w.push_back(SemiringValue::cost(c));
  return Framework::weighted(5, std::move(attacks), std::move(w), make_instance(SemiringKind::Weighted), std::move(names));
}

}  // namespace argcsp
