#pragma once

// Species, complexes, reactions and the stoichiometric matrix of a chemical
// reaction network, plus the discrete state update used by the oracle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crnx {

using Count = std::int64_t;

struct Species {
  std::size_t index = 0;
  std::string name;
};

// Nonnegative integer combination of species.
struct Complex {
  std::vector<Count> coeffs;

  std::size_t size() const { return coeffs.size(); }
  bool is_zero() const;
  // Componentwise `*this <= other`.
  bool leq(const Complex& other) const;

  friend bool operator==(const Complex&, const Complex&) = default;
  friend auto operator<=>(const Complex&, const Complex&) = default;
};

// Source and target are indices into ReactionNetwork::complexes().
struct Reaction {
  std::size_t index = 0;
  std::size_t source = 0;
  std::size_t target = 0;
};

using State = std::vector<Count>;

class ReactionNetwork {
 public:
  ReactionNetwork() = default;

  const std::vector<Species>& species() const { return species_; }
  const std::vector<Complex>& complexes() const { return complexes_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }

  std::size_t num_species() const { return species_.size(); }
  std::size_t num_complexes() const { return complexes_.size(); }
  std::size_t num_reactions() const { return reactions_.size(); }

  const Complex& source(std::size_t k) const {
    return complexes_[reactions_.at(k).source];
  }
  const Complex& target(std::size_t k) const {
    return complexes_[reactions_.at(k).target];
  }

  std::optional<std::size_t> find_complex(const Complex& c) const;
  std::optional<std::size_t> find_species(const std::string& name) const;

  // "2 X1 + X2"; the zero complex prints as "0".
  std::string format(const Complex& c) const;
  std::string complex_name(std::size_t index) const {
    return format(complexes_.at(index));
  }

 private:
  friend ReactionNetwork build_network(
      std::vector<std::string>, const std::vector<std::pair<Complex, Complex>>&);

  std::vector<Species> species_;
  std::vector<Complex> complexes_;
  std::vector<Reaction> reactions_;
};

// Complexes are deduplicated in first-appearance order (source, then target,
// reactions in input order). Throws InputError on duplicate species names,
// length mismatches and negative coefficients.
ReactionNetwork build_network(
    std::vector<std::string> species_names,
    const std::vector<std::pair<Complex, Complex>>& reactions);

// Dense m x r integer matrix; column k is target(k) - source(k).
class StoichMatrix {
 public:
  StoichMatrix() = default;
  StoichMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Count& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  Count operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  StoichMatrix transposed() const;
  std::vector<std::vector<Count>> to_rows() const;
  static StoichMatrix from_rows(const std::vector<std::vector<Count>>& rows);

  friend bool operator==(const StoichMatrix&, const StoichMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Count> entries_;
};

StoichMatrix stoich_matrix(const ReactionNetwork& net);

// X >= y componentwise. Throws InputError on length mismatch.
bool is_charged(const Complex& y, const State& x);

// X + target - source when the source of reaction k is charged at X.
// Throws std::out_of_range for an invalid reaction index.
std::optional<State> fire(const ReactionNetwork& net, const State& x, std::size_t k);

}  // namespace crnx
