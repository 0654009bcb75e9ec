#include "catalania/linear_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "catalania/enumeration.hpp"

namespace catalania {

namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace

LinearForm LinearForm::zero(int t, std::string note) {
  LinearForm f;
  f.t = t;
  f.m.assign(static_cast<size_t>(t), std::vector<long long>(static_cast<size_t>(t) + 1, 0));
  f.note = std::move(note);
  return f;
}

LinearForm LinearForm::driving(int t) {
  LinearForm f = zero(t, "driving function");
  for (int k = 1; k <= t; ++k) f.m[static_cast<size_t>(k - 1)][static_cast<size_t>(k - 1)] = -1;
  return f;
}

void LinearForm::add_r_difference(int c_index, int a, int b, long long coeff) {
  if (c_index < 1 || c_index > t) throw std::invalid_argument("coefficient index out of range");
  if (a == b) return;
  long long sign = coeff;
  if (a > b) {
    std::swap(a, b);
    sign = -sign;
  }
  if (a < 1 || b > t + 1) throw std::invalid_argument("r index out of range");
  auto& row = m[static_cast<size_t>(c_index - 1)];
  for (int i = a; i < b; ++i) {
    row[static_cast<size_t>(i - 1)] += sign;
    row[static_cast<size_t>(i)] += sign;
  }
}

bool LinearForm::is_zero() const {
  for (const auto& row : m)
    for (long long v : row)
      if (v != 0) return false;
  return true;
}

bool LinearForm::rows_are_r_differences() const {
  for (const auto& row : m) {
    long long alt = 0;
    for (size_t i = 0; i < row.size(); ++i) alt += (i % 2 == 0 ? row[i] : -row[i]);
    if (alt != 0) return false;
  }
  return true;
}

std::vector<long long> LinearForm::evaluate(const std::vector<long long>& c_values) const {
  if (static_cast<int>(c_values.size()) != t)
    throw std::invalid_argument("evaluate needs exactly t coefficient values");
  std::vector<long long> out(static_cast<size_t>(t) + 1, 0);
  for (int k = 0; k < t; ++k)
    for (int i = 0; i <= t; ++i)
      out[static_cast<size_t>(i)] +=
          c_values[static_cast<size_t>(k)] * m[static_cast<size_t>(k)][static_cast<size_t>(i)];
  return out;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  ensure(t == o.t, "form arity mismatch");
  LinearForm f = *this;
  for (size_t k = 0; k < m.size(); ++k)
    for (size_t i = 0; i < m[k].size(); ++i) f.m[k][i] += o.m[k][i];
  return f;
}

LinearForm LinearForm::operator-(const LinearForm& o) const {
  ensure(t == o.t, "form arity mismatch");
  LinearForm f = *this;
  for (size_t k = 0; k < m.size(); ++k)
    for (size_t i = 0; i < m[k].size(); ++i) f.m[k][i] -= o.m[k][i];
  return f;
}

std::string LinearForm::str() const {
  std::ostringstream os;
  bool any = false;
  for (int k = 1; k <= t; ++k) {
    const auto& row = m[static_cast<size_t>(k - 1)];
    bool rowany = false;
    for (long long v : row) rowany |= v != 0;
    if (!rowany) continue;
    if (any) os << " + ";
    any = true;
    os << 'c' << k << "*(";
    bool first = true;
    for (int i = 0; i <= t; ++i) {
      long long v = row[static_cast<size_t>(i)];
      if (v == 0) continue;
      if (!first && v > 0) os << '+';
      first = false;
      if (v == -1)
        os << '-';
      else if (v != 1)
        os << v << '*';
      os << 'm' << i + 1;
    }
    os << ')';
  }
  if (!any) os << '0';
  return os.str();
}

std::optional<std::vector<long long>> to_r_difference_basis(const std::vector<long long>& mvec) {
  const int n = static_cast<int>(mvec.size());
  if (n < 2) return std::nullopt;
  std::vector<long long> coords(static_cast<size_t>(n) - 1, 0);
  long long carry = 0;
  for (int i = 0; i + 1 < n; ++i) {
    coords[static_cast<size_t>(i)] = mvec[static_cast<size_t>(i)] - carry;
    carry = coords[static_cast<size_t>(i)];
  }
  if (mvec.back() != carry) return std::nullopt;
  return coords;
}

FormOrder compare(const LinearForm& f, const LinearForm& g, const std::vector<long long>& c_values) {
  std::vector<long long> a = f.evaluate(c_values);
  std::vector<long long> b = g.evaluate(c_values);
  std::vector<long long> diff(a.size());
  for (size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  auto coords = to_r_difference_basis(diff);
  if (!coords)
    throw std::invalid_argument("difference is not a combination of the r-differences");
  bool pos = false, neg = false;
  for (long long v : *coords) {
    pos |= v > 0;
    neg |= v < 0;
  }
  if (!pos && !neg) return FormOrder::Equal;
  if (pos && neg) return FormOrder::Incomparable;
  return pos ? FormOrder::Greater : FormOrder::Less;
}

LinearForm tableau_function(const Tableau& tab) {
  const Diagram& d = tab.diagram;
  ensure(is_complete(d), "row functions are summed over complete tableaux only");
  const int t = d.order() - 1;
  LinearForm f = LinearForm::zero(t, "class function of " + d.str());
  for (int u = 1; u <= d.height(); ++u) {
    std::vector<int> cols;
    for (int i = 1; i <= d.order(); ++i)
      if (d.col(i) >= u) cols.push_back(i);
    const int k = static_cast<int>(cols.size());
    if (u % 2 == 1) {
      for (int j = 0; j + 1 < k; ++j)
        f.add_r_difference(cols[static_cast<size_t>(j)], cols[static_cast<size_t>(j)],
                           cols[static_cast<size_t>(j + 1)], +1);
    } else {
      for (int j = 1; j < k; ++j)
        f.add_r_difference(cols[static_cast<size_t>(j)] - 1, cols[static_cast<size_t>(j - 1)],
                           cols[static_cast<size_t>(j)], -1);
    }
  }
  return f;
}

LinearForm class_function(const ClassKey& key) {
  const Diagram dmin = minimal_complete_representative(key);
  LinearForm f = tableau_function(label_tableau(dmin));
  // Representative independence across the taller reduced representative and
  // one more completion above it.
  const Diagram dtall = taller_complete_representative(key);
  LinearForm g = tableau_function(label_tableau(dtall));
  ensure(f.equals(g), "class function differs between the two reduced representatives of " +
                          key.str());
  Diagram higher = dtall;
  higher.heights[static_cast<size_t>(strongly_extremal_column(dtall) - 1)] += 1;
  higher = complete(higher);
  LinearForm h = tableau_function(label_tableau(higher));
  ensure(f.equals(h), "class function differs on a taller completion of " + key.str());
  f.note = "class function of " + key.str();
  return f;
}

LinearForm dual_function(const LinearForm& f) {
  const int t = f.t;
  LinearForm out = LinearForm::zero(t, f.note.empty() ? "" : "dual of " + f.note);
  for (int k = 1; k <= t; ++k) {
    auto coords = to_r_difference_basis(f.row(k));
    if (!coords)
      throw std::invalid_argument("dual_function needs rows spanned by the r-differences");
    // c_k -> c_{t+1-k}; r^i - r^{i+1} -> -(r^{t+1-i} - r^{t+2-i}).
    for (int i = 1; i <= t; ++i) {
      long long v = (*coords)[static_cast<size_t>(i - 1)];
      if (v != 0) out.add_r_difference(t + 1 - k, t + 1 - i, t + 2 - i, -v);
    }
  }
  for (int k = 1; k <= t; ++k) out.add_r_difference(k, k, k + 1, +1);
  return out;
}

LinearForm shift_embed(const LinearForm& f, int offset, int new_t) {
  if (offset < 0 || f.t + offset > new_t) throw std::invalid_argument("shift_embed out of range");
  LinearForm out = LinearForm::zero(new_t, f.note);
  for (int k = 1; k <= f.t; ++k)
    for (int i = 0; i <= f.t; ++i)
      out.m[static_cast<size_t>(offset + k - 1)][static_cast<size_t>(offset + i)] =
          f.m[static_cast<size_t>(k - 1)][static_cast<size_t>(i)];
  return out;
}

}  // namespace catalania
