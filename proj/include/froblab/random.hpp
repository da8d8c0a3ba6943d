#pragma once

#include <froblab/diagram.hpp>
#include <froblab/evaluate.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace froblab {

using Rng = std::mt19937_64;

/// Uniform index below n. Plain modulo keeps sequences identical across
/// standard library implementations.
inline std::size_t uniform_index(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream for trial `index` of family `stream` under `seed`.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return Rng(splitmix64(seed ^ splitmix64(stream * 0x100000001b3ULL + index)));
}

/// p / q with p in [-3, 3] and q in [1, 3]; p != 0 when `nonzero`.
inline Rational random_rational(Rng& rng, bool nonzero = false) {
  long p = static_cast<long>(uniform_index(rng, nonzero ? 6 : 7)) - 3;
  if (nonzero && p >= 0) ++p;
  long const q = static_cast<long>(uniform_index(rng, 3)) + 1;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool nonzero = false) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_rational(rng, nonzero));
  return m;
}

inline Morphism random_morphism(Rng& rng, MatObject const& dom, MatObject const& cod,
                                bool nonzero = false) {
  return {dom, cod, random_matrix(rng, cod.dimension(), dom.dimension(), nonzero)};
}

/// A random invertible endomorphism (unit lower times unit upper triangular).
inline Morphism random_invertible(Rng& rng, MatObject const& a) {
  std::size_t const n = a.dimension();
  Matrix lower = Matrix::identity(n);
  Matrix upper = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower.set(i, j, random_rational(rng));
      upper.set(j, i, random_rational(rng));
    }
  return {a, a, multiply(lower, upper)};
}

struct DiagramGenConfig {
  std::size_t max_dim = 4;       // wire dimensions are drawn from [1, max_dim]
  std::size_t max_slices = 6;    // one generator node per slice
  std::size_t max_width = 3;     // wires crossing any interface
  std::size_t carrier_dim = 4;   // largest functor carrier the diagram must fit
  std::size_t budget = 256;      // bound on prod (dim * carrier_dim) per interface
  std::size_t max_arity = 2;
  std::size_t labels = 3;        // size of the wire-label pool
};

struct RandomDiagram {
  TensorScheme scheme;
  LayeredDiagram diagram;
  Labelling labelling;
};

namespace detail {

class DiagramGrower {
 public:
  DiagramGrower(Rng& rng, DiagramGenConfig const& cfg, std::map<std::string, std::size_t> dims,
                std::string prefix)
      : rng_(rng), cfg_(cfg), dims_(std::move(dims)), prefix_(std::move(prefix)) {
    for (auto const& [label, d] : dims_) pool_.push_back(label);
  }

  /// Grows a connected diagram; `acyclic` restricts every attachment to one
  /// shared wire.
  LayeredDiagram grow(bool acyclic) {
    std::size_t const target = 1 + uniform_index(rng_, cfg_.max_slices);
    start();
    for (std::size_t attempt = 0; nodes_ < target && attempt < 40 * target; ++attempt) {
      if (uniform_index(rng_, 2) == 0)
        attach_forward(acyclic);
      else
        attach_backward(acyclic);
    }
    return LayeredDiagram(input_, output_, slices_);
  }

  std::vector<Generator> const& generators() const noexcept { return generators_; }

 private:
  Word random_word(std::size_t n) {
    Word w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(pool_[uniform_index(rng_, pool_.size())]);
    return w;
  }

  bool fits(Word const& w) const {
    if (w.size() > cfg_.max_width) return false;
    std::size_t cost = 1;
    for (auto const& label : w) cost *= dims_.at(label) * cfg_.carrier_dim;
    return cost <= cfg_.budget;
  }

  Generator make_generator(Word source, Word target) {
    Generator g{prefix_ + std::to_string(nodes_), std::move(source), std::move(target)};
    generators_.push_back(g);
    return g;
  }

  void start() {
    Word source;
    Word target;
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::size_t const in = uniform_index(rng_, cfg_.max_arity + 1);
      std::size_t const out = uniform_index(rng_, cfg_.max_arity + 1);
      source = random_word(in);
      target = random_word(in + out == 0 ? 1 : out);
      if (fits(source) && fits(target)) break;
      source = {};
      target = {smallest_label()};
    }
    Generator g = make_generator(source, target);
    input_ = source;
    output_ = target;
    slices_ = {Slice{GeneratorNode{g, nodes_++}}};
  }

  std::string smallest_label() const {
    std::string best = pool_.front();
    for (auto const& l : pool_)
      if (dims_.at(l) < dims_.at(best)) best = l;
    return best;
  }

  /// Interfaces of the diagram with `slices`, from the input word on.
  bool all_fit(Word const& input, std::vector<Slice> const& slices) const {
    if (!fits(input)) return false;
    for (auto const& s : slices)
      if (!fits(slice_output(s))) return false;
    return true;
  }

  static void add_through_wire(std::vector<Slice>& slices, std::string const& label, bool top) {
    for (auto& s : slices) {
      if (top)
        s.insert(s.begin(), IdentityWire{label});
      else
        s.push_back(IdentityWire{label});
    }
  }

  /// A run of p >= 1 consecutive wires of `w`, optionally with one fresh
  /// wire at the top or bottom end when the run touches that end.
  struct Run {
    std::size_t start = 0;
    std::size_t length = 0;
    int fresh = 0;  // 0 none, 1 top, 2 bottom
  };

  std::optional<Run> choose_run(std::size_t width, bool acyclic) {
    if (width == 0) return std::nullopt;
    Run r;
    std::size_t const max_p = acyclic ? 1 : std::min(width, cfg_.max_arity);
    r.length = 1 + uniform_index(rng_, max_p);
    r.start = uniform_index(rng_, width - r.length + 1);
    if (r.length < cfg_.max_arity && uniform_index(rng_, 3) == 0) {
      bool const top = r.start == 0;
      bool const bottom = r.start + r.length == width;
      if (top && bottom)
        r.fresh = 1 + static_cast<int>(uniform_index(rng_, 2));
      else if (top)
        r.fresh = 1;
      else if (bottom)
        r.fresh = 2;
    }
    return r;
  }

  void attach_forward(bool acyclic) {
    auto run = choose_run(output_.size(), acyclic);
    if (!run) return;
    std::string const fresh = pool_[uniform_index(rng_, pool_.size())];
    Word source(output_.begin() + run->start, output_.begin() + run->start + run->length);
    if (run->fresh == 1) source.insert(source.begin(), fresh);
    if (run->fresh == 2) source.push_back(fresh);
    Word const target = random_word(uniform_index(rng_, cfg_.max_arity + 1));

    Word input = input_;
    std::vector<Slice> slices = slices_;
    Word before = output_;
    std::size_t at = run->start;
    if (run->fresh == 1) {
      input.insert(input.begin(), fresh);
      add_through_wire(slices, fresh, true);
      before.insert(before.begin(), fresh);
    } else if (run->fresh == 2) {
      input.push_back(fresh);
      add_through_wire(slices, fresh, false);
      before.push_back(fresh);
    }
    Generator const g{prefix_ + std::to_string(nodes_), source, target};
    Slice s;
    for (std::size_t i = 0; i < at; ++i) s.push_back(IdentityWire{before[i]});
    s.push_back(GeneratorNode{g, nodes_});
    for (std::size_t i = at + source.size(); i < before.size(); ++i) s.push_back(IdentityWire{before[i]});
    slices.push_back(s);
    if (!all_fit(input, slices)) return;
    generators_.push_back(g);
    ++nodes_;
    input_ = std::move(input);
    slices_ = std::move(slices);
    output_ = slice_output(slices_.back());
  }

  void attach_backward(bool acyclic) {
    auto run = choose_run(input_.size(), acyclic);
    if (!run) return;
    std::string const fresh = pool_[uniform_index(rng_, pool_.size())];
    Word target(input_.begin() + run->start, input_.begin() + run->start + run->length);
    if (run->fresh == 1) target.insert(target.begin(), fresh);
    if (run->fresh == 2) target.push_back(fresh);
    Word const source = random_word(uniform_index(rng_, cfg_.max_arity + 1));

    Word output = output_;
    std::vector<Slice> slices = slices_;
    Word after = input_;
    std::size_t const at = run->start;
    if (run->fresh == 1) {
      output.insert(output.begin(), fresh);
      add_through_wire(slices, fresh, true);
      after.insert(after.begin(), fresh);
    } else if (run->fresh == 2) {
      output.push_back(fresh);
      add_through_wire(slices, fresh, false);
      after.push_back(fresh);
    }
    Generator const g{prefix_ + std::to_string(nodes_), source, target};
    Slice s;
    for (std::size_t i = 0; i < at; ++i) s.push_back(IdentityWire{after[i]});
    s.push_back(GeneratorNode{g, nodes_});
    for (std::size_t i = at + target.size(); i < after.size(); ++i) s.push_back(IdentityWire{after[i]});
    slices.insert(slices.begin(), s);
    Word const input = slice_input(s);
    if (!all_fit(input, slices)) return;
    generators_.push_back(g);
    ++nodes_;
    input_ = input;
    slices_ = std::move(slices);
    output_ = std::move(output);
  }

  Rng& rng_;
  DiagramGenConfig const& cfg_;
  std::map<std::string, std::size_t> dims_;
  std::vector<std::string> pool_;
  std::string prefix_;
  Word input_;
  Word output_;
  std::vector<Slice> slices_;
  std::vector<Generator> generators_;
  std::size_t nodes_ = 0;
};

inline std::map<std::string, std::size_t> random_label_dims(Rng& rng, DiagramGenConfig const& cfg) {
  std::map<std::string, std::size_t> dims;
  for (std::size_t i = 0; i < cfg.labels; ++i)
    dims[std::string(1, static_cast<char>('A' + i))] = 1 + uniform_index(rng, cfg.max_dim);
  return dims;
}

inline Labelling random_labelling(Rng& rng, std::map<std::string, std::size_t> const& dims,
                                  std::vector<Generator> const& generators, bool nonzero = false) {
  Labelling v;
  for (auto const& [label, d] : dims) v.objects.emplace(label, MatObject::single(label, d));
  for (auto const& g : generators)
    v.nodes.emplace(g.name, random_morphism(rng, v.object(g.source), v.object(g.target), nonzero));
  return v;
}

inline TensorScheme scheme_of(std::map<std::string, std::size_t> const& dims,
                              std::vector<Generator> const& generators) {
  TensorScheme s;
  for (auto const& [label, d] : dims) s.vertices.push_back(label);
  s.edges = generators;
  return s;
}

}  // namespace detail

/// A fresh labelling of the same scheme with the same object dimensions.
inline Labelling random_relabelling(Rng& rng, RandomDiagram const& r, bool nonzero = false) {
  std::map<std::string, std::size_t> dims;
  for (auto const& [label, obj] : r.labelling.objects) dims[label] = obj.dimension();
  return detail::random_labelling(rng, dims, r.scheme.edges, nonzero);
}

/// Connected layered diagram grown by attaching one node at a time to the
/// left or right boundary through p >= 1 existing wires (p = 1 when
/// `acyclic`), with a random rational labelling.
inline RandomDiagram random_connected_diagram(Rng& rng, DiagramGenConfig const& cfg, bool acyclic) {
  auto dims = detail::random_label_dims(rng, cfg);
  detail::DiagramGrower grower(rng, cfg, dims, "g");
  auto d = grower.grow(acyclic);
  auto v = detail::random_labelling(rng, dims, grower.generators());
  return {detail::scheme_of(dims, grower.generators()), std::move(d), std::move(v)};
}

/// The tensor of two independently grown connected diagrams.
inline RandomDiagram random_disconnected_diagram(Rng& rng, DiagramGenConfig const& cfg) {
  auto dims = detail::random_label_dims(rng, cfg);
  DiagramGenConfig half = cfg;
  half.max_slices = std::max<std::size_t>(1, cfg.max_slices / 2);
  // Each half gets its own share of the interface budget.
  half.max_width = std::max<std::size_t>(1, cfg.max_width / 2 + cfg.max_width % 2);
  half.budget = 1;
  while (half.budget * half.budget <= cfg.budget) ++half.budget;
  --half.budget;
  detail::DiagramGrower top(rng, half, dims, "g");
  auto a = top.grow(false);
  detail::DiagramGrower bottom(rng, half, dims, "h");
  auto b = bottom.grow(false);
  auto gens = top.generators();
  gens.insert(gens.end(), bottom.generators().begin(), bottom.generators().end());
  auto v = detail::random_labelling(rng, dims, gens);
  return {detail::scheme_of(dims, gens), tensor(a, b), std::move(v)};
}

}  // namespace froblab
