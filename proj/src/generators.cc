// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctn/generators.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace ctn {
namespace {

constexpr int kMaxAttempts = 200;

SetFunction Truncate(const SetFunction& f, std::int64_t rank) {
  std::vector<std::int64_t> values = f.values();
  for (std::int64_t& v : values) v = std::min(v, rank);
  return SetFunction(f.ground(), std::move(values));
}

// Concave sequence of `length` values: increments are non-increasing.
std::vector<Rat> ConcaveSequence(std::int64_t length,
                                 const std::function<Rat()>& draw) {
  std::vector<Rat> steps;
  for (std::int64_t k = 1; k < length; ++k) steps.push_back(draw());
  std::sort(steps.begin(), steps.end(), std::greater<>());
  std::vector<Rat> seq{draw()};
  for (const Rat& s : steps) seq.push_back(seq.back() + s);
  return seq;
}

// The table at -z: mirrors a nonnegative-box table onto the buyer side.
FiniteIntFunction Reflect(const FiniteIntFunction& f) {
  std::vector<std::pair<IntVec, ExtRat>> entries;
  for (const auto& [z, v] : f.entries()) {
    IntVec m = z;
    for (std::int64_t& c : m) c = -c;
    entries.emplace_back(std::move(m), v);
  }
  return FiniteIntFunction(f.index(), std::move(entries));
}

}  // namespace

const char* ToString(Orientation o) {
  switch (o) {
    case Orientation::kOutgoingMSharp:
      return "outgoing-msharp";
    case Orientation::kIncomingMSharp:
      return "incoming-msharp";
  }
  return "?";
}

std::int64_t InstanceGenerator::Uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng_() % width);
}

Rat InstanceGenerator::HalfInteger(std::int64_t lo, std::int64_t hi) {
  return Rat(Uniform(2 * lo, 2 * hi), 2);
}

FiniteIntFunction InstanceGenerator::Linear(const IndexSet& index,
                                            const IntVec& lower,
                                            const IntVec& upper) {
  RatVec c;
  for (std::size_t k = 0; k < index.size(); ++k) c.push_back(HalfInteger(-2, 2));
  const Rat c0 = HalfInteger(-1, 1);
  std::vector<std::pair<IntVec, ExtRat>> entries;
  for (IntVec& z : BoxPoints(lower, upper)) {
    const Rat v = c0 + Dot(c, z);
    entries.emplace_back(std::move(z), v);
  }
  return FiniteIntFunction(index, std::move(entries));
}

FiniteIntFunction InstanceGenerator::Candidate(const IndexSet& index,
                                               const IntVec& lower,
                                               const IntVec& upper) {
  const std::size_t n = index.size();
  // Recipes work on t = z - lower, which ranges over [0, span].
  IntVec span(n);
  for (std::size_t k = 0; k < n; ++k) span[k] = upper[k] - lower[k];
  auto draw = [this] { return HalfInteger(-2, 2); };
  const int recipe = static_cast<int>(Uniform(0, 3));
  RatVec linear(n, Rat(0));
  if (recipe != 1 || Uniform(0, 1) == 0) {
    for (Rat& c : linear) c = draw();
  }
  std::vector<std::vector<Rat>> separable;
  std::vector<Rat> of_sum;
  RatVec weights;
  std::int64_t rank = 0;
  std::int64_t total = 0;
  for (std::int64_t s : span) total += s;
  switch (recipe) {
    case 1:
      for (std::size_t k = 0; k < n; ++k) {
        separable.push_back(ConcaveSequence(span[k] + 1, draw));
      }
      break;
    case 2:
      of_sum = ConcaveSequence(total + 1, draw);
      break;
    case 3:
      for (std::size_t k = 0; k < n; ++k) weights.push_back(HalfInteger(0, 3));
      rank = Uniform(1, std::max<std::int64_t>(1, total));
      break;
    default:
      break;
  }
  std::optional<Polymatroid> shape;
  if (n > 0 && Uniform(0, 2) == 0) {
    shape = RandomPolymatroid(index, span);
  }
  std::vector<std::pair<IntVec, ExtRat>> entries;
  for (IntVec& z : BoxPoints(lower, upper)) {
    IntVec t(n);
    for (std::size_t k = 0; k < n; ++k) t[k] = z[k] - lower[k];
    if (shape && !shape->Contains(std::span<const std::int64_t>(t))) continue;
    Rat v = Dot(linear, t);
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      sum += t[k];
      if (!separable.empty()) v += separable[k][t[k]];
    }
    if (!of_sum.empty()) v += of_sum[sum];
    if (!weights.empty()) {
      // Best `rank` unit copies, copy k worth weights[k].
      std::vector<Rat> units;
      for (std::size_t k = 0; k < n; ++k) {
        units.insert(units.end(), t[k], weights[k]);
      }
      std::sort(units.begin(), units.end(), std::greater<>());
      for (std::size_t u = 0; u < units.size() && u < std::size_t(rank); ++u) {
        v += units[u];
      }
    }
    entries.emplace_back(std::move(z), v);
  }
  return FiniteIntFunction(index, std::move(entries));
}

FiniteIntFunction InstanceGenerator::MSharpConcave(const IndexSet& index,
                                                   const IntVec& lower,
                                                   const IntVec& upper) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    FiniteIntFunction f = Candidate(index, lower, upper);
    if (IsMSharpConcave(f)) return f;
  }
  return Linear(index, lower, upper);
}

SetFunction InstanceGenerator::Coverage(const IndexSet& ground,
                                        std::int64_t max_singleton) {
  const int n = static_cast<int>(ground.size());
  const int items = std::max(2, n + 1);
  std::vector<std::uint32_t> covers(n, 0);
  for (int e = 0; e < n; ++e) {
    const std::int64_t want = std::min<std::int64_t>(
        Uniform(std::min<std::int64_t>(1, max_singleton), max_singleton),
        items);
    while (std::popcount(covers[e]) < want) {
      covers[e] |= 1u << Uniform(0, items - 1);
    }
  }
  std::vector<std::int64_t> values(std::size_t{1} << n);
  for (Subset s = 0; s < values.size(); ++s) {
    std::uint32_t u = 0;
    for (int e = 0; e < n; ++e) {
      if (s >> e & 1) u |= covers[e];
    }
    values[s] = std::popcount(u);
  }
  SetFunction f(ground, std::move(values));
  const std::int64_t top = f(f.full());
  if (top > 1 && Uniform(0, 2) == 0) return Truncate(f, Uniform(1, top - 1));
  return f;
}

Polymatroid InstanceGenerator::RandomPolymatroid(const IndexSet& ground,
                                                 const IntVec& caps) {
  if (Uniform(0, 2) == 0) {
    std::int64_t total = 0;
    for (std::int64_t c : caps) total += c;
    const Subset full = (Subset{1} << ground.size()) - 1;
    return Polymatroid::Create(SetFunction::CapacityCaps(
        ground, caps, {{full, Uniform(0, total)}}));
  }
  const std::int64_t top =
      caps.empty() ? 0 : *std::max_element(caps.begin(), caps.end());
  SetFunction f = Coverage(ground, top);
  // Respect per-element caps: f'(S) = min over T within S of
  // f(T) + caps(S \ T), the rank of P_f intersected with the cap box.
  std::vector<std::int64_t> values(f.values().size());
  for (Subset s = 0; s < values.size(); ++s) {
    std::int64_t best = f(s);
    for (Subset t = s;; t = (t - 1) & s) {
      best = std::min(best, f(t) + SubsetSum(std::span<const std::int64_t>(caps),
                                             s & ~t));
      if (t == 0) break;
    }
    values[s] = best;
  }
  return Polymatroid::Create(SetFunction(ground, std::move(values)));
}

PointSet InstanceGenerator::MConvexSet(const IndexSet& ground,
                                       std::int64_t max_singleton) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    PointSet b = PointsFromSetFunction(Coverage(ground, max_singleton)).base;
    if (IsMConvexSet(b)) return b;
  }
  throw std::logic_error("no M-convex set generated");
}

std::pair<PointSet, PointSet> InstanceGenerator::MConvexPair(
    const IndexSet& ground, std::int64_t max_singleton) {
  const SetFunction f1 = Coverage(ground, max_singleton);
  const SetFunction f2 = Coverage(ground, max_singleton);
  const std::int64_t rank = std::min(f1(f1.full()), f2(f2.full()));
  return {PointsFromSetFunction(Truncate(f1, rank)).base,
          PointsFromSetFunction(Truncate(f2, rank)).base};
}

RatVec InstanceGenerator::HullPoint(const FiniteIntFunction& f) {
  const PointSet dom = f.EffectiveDomain();
  if (dom.empty()) throw std::invalid_argument("empty effective domain");
  const std::int64_t picks =
      Uniform(1, std::min<std::int64_t>(3, static_cast<std::int64_t>(dom.size())));
  RatVec mean(f.dimension(), Rat(0));
  std::int64_t total = 0;
  std::vector<std::pair<const IntVec*, std::int64_t>> chosen;
  for (std::int64_t k = 0; k < picks; ++k) {
    const IntVec& z =
        dom.points()[Uniform(0, static_cast<std::int64_t>(dom.size()) - 1)];
    const std::int64_t w = Uniform(1, 3);
    chosen.emplace_back(&z, w);
    total += w;
  }
  for (const auto& [z, w] : chosen) {
    for (std::size_t i = 0; i < mean.size(); ++i) {
      mean[i] += Rat(w * (*z)[i], total);
    }
  }
  return mean;
}

EAInstance InstanceGenerator::TwoSided(const TwoSidedOptions& options) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int sellers = static_cast<int>(Uniform(1, options.max_sellers));
    const int buyers = static_cast<int>(Uniform(1, options.max_buyers));
    std::vector<std::string> agents;
    for (int k = 0; k < sellers; ++k) agents.push_back("S" + std::to_string(k));
    for (int k = 0; k < buyers; ++k) agents.push_back("B" + std::to_string(k));
    std::vector<Arc> arcs;
    const auto m = Uniform(options.min_arcs, options.max_arcs);
    for (std::int64_t e = 0; e < m; ++e) {
      arcs.push_back({"e" + std::to_string(e),
                      agents[Uniform(0, sellers - 1)],
                      agents[sellers + Uniform(0, buyers - 1)],
                      Uniform(1, options.max_capacity)});
    }
    const TradeGraph g(agents, arcs);
    std::vector<FiniteIntFunction> ws;
    for (int i = 0; i < g.num_agents(); ++i) {
      const bool seller = i < sellers;
      // Built on [0, cap] and mirrored for buyers, so that the no-trade
      // point is always in the domain.
      IntVec zero, cap;
      for (std::size_t e : g.incident(i)) {
        zero.push_back(0);
        cap.push_back(g.arcs()[e].capacity);
      }
      const bool msharp =
          seller == (options.orientation == Orientation::kOutgoingMSharp);
      FiniteIntFunction w = msharp ? MSharpConcave(g.LocalIndex(i), zero, cap)
                                   : Linear(g.LocalIndex(i), zero, cap);
      ws.push_back(seller ? std::move(w) : Reflect(w));
    }
    std::optional<Polymatroid> p;
    if (options.constrained) {
      p = RandomPolymatroid(g.arc_index(), g.Capacities());
    }
    EAInstance inst(Economy(g, std::move(ws)), std::move(p));
    if (ClassifyStructure(inst.economy()).integrality_hypotheses) return inst;
  }
  throw std::logic_error("no two-sided instance generated");
}

EAInstance InstanceGenerator::MultiSided(const MultiSidedOptions& options) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int n = static_cast<int>(Uniform(2, options.max_agents));
    std::vector<std::string> agents;
    for (int k = 0; k < n; ++k) agents.push_back("N" + std::to_string(k));
    std::vector<Arc> arcs;
    const auto m = Uniform(2, options.max_arcs);
    for (std::int64_t e = 0; e < m; ++e) {
      const auto s = Uniform(0, n - 1);
      const auto b = (s + Uniform(1, n - 1)) % n;
      arcs.push_back({"e" + std::to_string(e), agents[s], agents[b],
                      Uniform(1, options.max_capacity)});
    }
    const TradeGraph g(agents, arcs);
    bool both = false;
    for (int i = 0; i < n; ++i) {
      bool sells = false, buys = false;
      for (std::size_t e : g.incident(i)) {
        (g.Sign(i, e) > 0 ? sells : buys) = true;
      }
      both = both || (sells && buys);
    }
    if (!both) continue;
    std::vector<FiniteIntFunction> ws;
    for (int i = 0; i < n; ++i) {
      IntVec lower, upper;
      for (std::size_t e : g.incident(i)) {
        const std::int64_t cap = g.arcs()[e].capacity;
        lower.push_back(g.Sign(i, e) > 0 ? 0 : -cap);
        upper.push_back(g.Sign(i, e) > 0 ? cap : 0);
      }
      ws.push_back(MSharpConcave(g.LocalIndex(i), lower, upper));
    }
    Economy econ(g, std::move(ws));
    if (!AggregateValue(econ, IntVec(g.num_arcs(), 0)).IsFinite()) continue;
    std::optional<Polymatroid> p;
    if (options.constrained) {
      p = RandomPolymatroid(g.arc_index(), g.Capacities());
    }
    return EAInstance(std::move(econ), std::move(p));
  }
  throw std::logic_error("no multi-sided instance generated");
}

}  // namespace ctn
