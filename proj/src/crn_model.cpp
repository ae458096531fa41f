#include "crnx/crn_model.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "crnx/errors.hpp"

namespace crnx {

bool Complex::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Count c) { return c == 0; });
}

bool Complex::leq(const Complex& other) const {
  if (coeffs.size() != other.coeffs.size()) return false;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] > other.coeffs[i]) return false;
  }
  return true;
}

std::optional<std::size_t> ReactionNetwork::find_complex(const Complex& c) const {
  auto it = std::find(complexes_.begin(), complexes_.end(), c);
  if (it == complexes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - complexes_.begin());
}

std::optional<std::size_t> ReactionNetwork::find_species(const std::string& name) const {
  for (const Species& s : species_) {
    if (s.name == name) return s.index;
  }
  return std::nullopt;
}

std::string ReactionNetwork::format(const Complex& c) const {
  std::string out;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    if (c.coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (c.coeffs[i] != 1) out += std::to_string(c.coeffs[i]) + " ";
    out += i < species_.size() ? species_[i].name : "?" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

ReactionNetwork build_network(
    std::vector<std::string> species_names,
    const std::vector<std::pair<Complex, Complex>>& reactions) {
  ReactionNetwork net;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < species_names.size(); ++i) {
    if (!seen.insert(species_names[i]).second) {
      throw InputError("duplicate species name '" + species_names[i] + "'");
    }
    net.species_.push_back(Species{i, std::move(species_names[i])});
  }
  const std::size_t m = net.species_.size();

  std::map<Complex, std::size_t> index_of;
  auto intern = [&](const Complex& c) {
    if (c.coeffs.size() != m) {
      throw InputError("complex has " + std::to_string(c.coeffs.size()) +
                       " coefficients, expected " + std::to_string(m));
    }
    for (Count v : c.coeffs) {
      if (v < 0) throw InputError("negative stoichiometric coefficient");
    }
    auto [it, inserted] = index_of.try_emplace(c, net.complexes_.size());
    if (inserted) net.complexes_.push_back(c);
    return it->second;
  };

  for (std::size_t k = 0; k < reactions.size(); ++k) {
    std::size_t s = intern(reactions[k].first);
    std::size_t t = intern(reactions[k].second);
    net.reactions_.push_back(Reaction{k, s, t});
  }
  return net;
}

StoichMatrix StoichMatrix::transposed() const {
  StoichMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<std::vector<Count>> StoichMatrix::to_rows() const {
  std::vector<std::vector<Count>> out(rows_, std::vector<Count>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

StoichMatrix StoichMatrix::from_rows(const std::vector<std::vector<Count>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  StoichMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

StoichMatrix stoich_matrix(const ReactionNetwork& net) {
  StoichMatrix gamma(net.num_species(), net.num_reactions());
  for (std::size_t k = 0; k < net.num_reactions(); ++k) {
    const Complex& y = net.source(k);
    const Complex& yp = net.target(k);
    for (std::size_t i = 0; i < net.num_species(); ++i) {
      gamma(i, k) = yp.coeffs[i] - y.coeffs[i];
    }
  }
  return gamma;
}

bool is_charged(const Complex& y, const State& x) {
  if (y.coeffs.size() != x.size()) {
    throw InputError("state and complex lengths differ");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y.coeffs[i]) return false;
  }
  return true;
}

std::optional<State> fire(const ReactionNetwork& net, const State& x, std::size_t k) {
  if (k >= net.num_reactions()) {
    throw std::out_of_range("reaction index " + std::to_string(k) + " out of range");
  }
  const Complex& y = net.source(k);
  if (!is_charged(y, x)) return std::nullopt;
  const Complex& yp = net.target(k);
  State next = x;
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (yp.coeffs[i] > std::numeric_limits<Count>::max() - (next[i] - y.coeffs[i])) {
      throw std::overflow_error("molecular count overflow");
    }
    next[i] += yp.coeffs[i] - y.coeffs[i];
  }
  return next;
}

}  // namespace crnx
