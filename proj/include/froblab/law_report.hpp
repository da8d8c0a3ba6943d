#pragma once

#include <froblab/morphism.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace froblab {

template <Scalar S>
struct LawWitness {
  std::string context;  // which sample objects / components failed
  BasicMorphism<S> lhs;
  std::optional<BasicMorphism<S>> rhs;
};

template <Scalar S>
struct LawEntry {
  std::string law;
  bool passed = true;
  std::size_t checked = 0;
  std::optional<LawWitness<S>> witness;  // first failure only
};

/// Outcome of a sampled law check. One entry per law; samples are folded
/// into it and the first failing sample is kept as the witness.
template <Scalar S>
class BasicLawReport {
 public:
  explicit BasicLawReport(double tolerance = 1e-9) : tolerance_(tolerance) {}

  double tolerance() const noexcept { return tolerance_; }

  /// Records lhs == rhs under `law`; returns whether it held.
  bool expect_equal(std::string const& law, BasicMorphism<S> const& lhs,
                    BasicMorphism<S> const& rhs, std::string const& context = {}) {
    bool const ok = same_value(lhs, rhs, tolerance_);
    record(law, ok, context, lhs, rhs);
    return ok;
  }

  bool expect(std::string const& law, bool ok, std::string const& context,
              BasicMorphism<S> const& witness) {
    record(law, ok, context, witness, std::nullopt);
    return ok;
  }

  void merge(BasicLawReport const& other, std::string const& prefix = {}) {
    for (auto const& e : other.entries_) {
      LawEntry<S>& mine = entry(prefix + e.law);
      mine.checked += e.checked;
      if (!e.passed && mine.passed) {
        mine.passed = false;
        mine.witness = e.witness;
      }
    }
  }

  std::vector<LawEntry<S>> const& entries() const noexcept { return entries_; }

  /// Copy with the named entry dropped.
  BasicLawReport without(std::string const& law) const {
    BasicLawReport r(tolerance_);
    for (auto const& e : entries_)
      if (e.law != law) r.entries_.push_back(e);
    return r;
  }

  bool all_passed() const {
    return std::all_of(entries_.begin(), entries_.end(), [](auto const& e) { return e.passed; });
  }

  bool has(std::string const& law) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](auto const& e) { return e.law == law; });
  }

  /// Whether `law` was checked and held on every sample.
  bool passed(std::string const& law) const {
    for (auto const& e : entries_)
      if (e.law == law) return e.passed;
    return false;
  }

  std::vector<std::string> failures() const {
    std::vector<std::string> r;
    for (auto const& e : entries_)
      if (!e.passed) r.push_back(e.law);
    return r;
  }

 private:
  LawEntry<S>& entry(std::string const& law) {
    for (auto& e : entries_)
      if (e.law == law) return e;
    entries_.push_back(LawEntry<S>{law, true, 0, std::nullopt});
    return entries_.back();
  }

  void record(std::string const& law, bool ok, std::string const& context,
              BasicMorphism<S> const& lhs, std::optional<BasicMorphism<S>> rhs) {
    LawEntry<S>& e = entry(law);
    ++e.checked;
    if (!ok && e.passed) {
      e.passed = false;
      e.witness = LawWitness<S>{context, lhs, std::move(rhs)};
    }
  }

  double tolerance_;
  std::vector<LawEntry<S>> entries_;
};

using LawReport = BasicLawReport<Rational>;

class LawError : public Error {
 public:
  LawError(std::string const& what, std::vector<std::string> failed)
      : Error(what), failed_(std::move(failed)) {}
  std::vector<std::string> const& failed() const noexcept { return failed_; }

 private:
  std::vector<std::string> failed_;
};

}  // namespace froblab
