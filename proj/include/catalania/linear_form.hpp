#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalania/diagram.hpp"
#include "catalania/tableau.hpp"

namespace catalania {

// A function separately linear in c_1..c_t and m^1..m^{t+1}, stored as an
// exact integer matrix.  Differences r^i - r^{i+1} embed as m^i + m^{i+1}.
struct LinearForm {
  int t = 0;
  std::vector<std::vector<long long>> m;  // t rows, t+1 columns
  std::string note;

  static LinearForm zero(int t, std::string note = "");
  static LinearForm driving(int t);  // -sum_i c_i m^i

  const std::vector<long long>& row(int c_index) const {
    return m[static_cast<size_t>(c_index - 1)];
  }
  // Adds coeff * c_{c_index} * (r^a - r^b).
  void add_r_difference(int c_index, int a, int b, long long coeff);
  bool is_zero() const;
  // Every row lies in the span of the r-differences.
  bool rows_are_r_differences() const;

  std::vector<long long> evaluate(const std::vector<long long>& c_values) const;

  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  bool equals(const LinearForm& o) const { return t == o.t && m == o.m; }
  std::string str() const;
};

// Coordinates of an m-vector in the basis f^i = r^i - r^{i+1}, when the
// vector lies in their span.
std::optional<std::vector<long long>> to_r_difference_basis(const std::vector<long long>& mvec);

enum class FormOrder { Greater, Less, Equal, Incomparable };

// Order relation on evaluated functions: f >= g when f - g is a non-negative
// combination of the f^i.  Throws when the difference leaves their span.
FormOrder compare(const LinearForm& f, const LinearForm& g, const std::vector<long long>& c_values);

// Sum of the row functions of a complete tableau.
LinearForm tableau_function(const Tableau& tab);

// The function of a class, independent of the complete representative used.
LinearForm class_function(const ClassKey& key);

// Substitution c_i -> c_{t+1-i}, r^i -> r^{t+2-i}, plus sum_i c_i(r^i-r^{i+1}).
LinearForm dual_function(const LinearForm& f);

// Embeds a form on indices 1..f.t into indices offset+1..offset+f.t of a
// t-coefficient space.
LinearForm shift_embed(const LinearForm& f, int offset, int new_t);

}  // namespace catalania
