#include "qrep/laurent.hpp"

#include <map>
#include <utility>

namespace qrep {

std::vector<std::int64_t> LaurentVector::support() const {
  std::vector<std::int64_t> s;
  s.reserve(size());
  for (const auto& [i, c] : terms()) s.push_back(i);
  return s;
}

PolyVector PolyVector::from_laurent(const LaurentVector& p) {
  PolyVector out;
  for (const auto& [i, c] : p.terms()) out.add_term(i, c);
  return out;
}

LaurentVector PolyVector::to_laurent() const {
  LaurentVector out;
  for (const auto& [i, c] : terms()) out.add_term(i, c);
  return out;
}

namespace {

template <class V>
std::string render(const V& p) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string label;
    if (it->first == 1) label = "t";
    else if (it->first != 0) label = "t^" + std::to_string(it->first);
    terms.emplace_back(it->second, label);
  }
  return format_sum(terms);
}

}  // namespace

std::string to_string(const LaurentVector& p) { return render(p); }
std::string to_string(const PolyVector& p) { return render(p); }

LaurentVector laurent_multiply(const LaurentVector& p, const LaurentVector& r) {
  LaurentVector out;
  for (const auto& [i, c] : p.terms()) {
    for (const auto& [j, d] : r.terms()) out.add_term(i + j, c * d);
  }
  return out;
}

LaurentVector dilate(const LaurentVector& p, const Scalar& c) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroDilation, "dilation by zero");
  LaurentVector out;
  for (const auto& [i, v] : p.terms()) out.add_term(i, v * c.pow(i));
  return out;
}

PolyVector tau_q(const FieldConfig& cfg, const PolyVector& p) {
  PolyVector out;
  for (const auto& [i, v] : p.terms()) out.add_term(i, v * q_pow(cfg, i));
  return out;
}

PolyVector jackson_derivative(const FieldConfig& cfg, const PolyVector& p) {
  PolyVector out;
  for (const auto& [k, v] : p.terms()) {
    if (k == 0) continue;
    out.add_term(k - 1, v * q_bracket(cfg, k));
  }
  return out;
}

PolyVector act_jackson(const FieldConfig& cfg, const QPlaneElement& u, const PolyVector& p) {
  PolyVector out;
  for (const auto& [m, c] : u.terms()) {
    PolyVector v = p;
    for (std::int64_t i = 0; i < m.b && !v.is_zero(); ++i) v = jackson_derivative(cfg, v);
    for (std::int64_t i = 0; i < m.a && !v.is_zero(); ++i) v = tau_q(cfg, v);
    out += c * v;
  }
  return out;
}

FaithfulnessReport jackson_faithfulness_probe(const FieldConfig& cfg, std::int64_t degree_bound) {
  if (degree_bound <= 0) throw Error(ErrorCode::InvalidParam, "degree bound must be positive");
  std::vector<Monomial> columns;
  for (std::int64_t a = 0; a <= degree_bound; ++a) {
    for (std::int64_t b = 0; b <= degree_bound; ++b) columns.push_back({a, b});
  }
  // Row (k, j): coefficient of t^j in the image of t^k.
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Scalar>> rows;
  for (std::size_t col = 0; col < columns.size(); ++col) {
    const auto u = QPlaneElement::monomial(columns[col].a, columns[col].b);
    for (std::int64_t k = 0; k <= 2 * degree_bound; ++k) {
      const PolyVector image = act_jackson(cfg, u, PolyVector::basis(k));
      for (const auto& [j, c] : image.terms()) {
        auto& row = rows[{k, j}];
        row.resize(columns.size());
        row[col] = c;
      }
    }
  }
  std::vector<std::vector<Scalar>> mat;
  mat.reserve(rows.size());
  for (auto& [key, row] : rows) mat.push_back(std::move(row));

  // Gauss-Jordan elimination; a free column yields a kernel vector.
  const std::size_t ncols = columns.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < mat.size(); ++col) {
    std::size_t piv = r;
    while (piv < mat.size() && mat[piv][col].is_zero()) ++piv;
    if (piv == mat.size()) continue;
    std::swap(mat[r], mat[piv]);
    const Scalar inv = mat[r][col].inverse();
    for (auto& e : mat[r]) e *= inv;
    for (std::size_t i = 0; i < mat.size(); ++i) {
      if (i == r || mat[i][col].is_zero()) continue;
      const Scalar factor = mat[i][col];
      for (std::size_t j = col; j < ncols; ++j) mat[i][j] -= factor * mat[r][j];
    }
    pivot_cols.push_back(col);
    ++r;
  }

  FaithfulnessReport report;
  report.degree_bound = degree_bound;
  if (pivot_cols.size() == ncols) return report;

  report.faithful = false;
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  QPlaneElement witness = QPlaneElement::monomial(columns[free_col].a, columns[free_col].b);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    const auto& m = columns[pivot_cols[i]];
    witness.add_term(m, -mat[i][free_col]);
  }
  report.kernel_witness = std::move(witness);
  return report;
}

std::vector<LaurentVector> LaurentSpan::basis() const {
  std::vector<LaurentVector> out;
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

LaurentVector LaurentSpan::reduce(LaurentVector v) const {
  while (!v.is_zero()) {
    auto it = rows_.find(v.max_exponent());
    if (it == rows_.end()) break;
    v -= v.coeff(it->first) * it->second;
  }
  return v;
}

bool LaurentSpan::insert(const LaurentVector& v) {
  LaurentVector r = reduce(v);
  if (r.is_zero()) return false;
  const std::int64_t pivot = r.max_exponent();
  r *= r.coeff(pivot).inverse();
  rows_.emplace(pivot, std::move(r));
  return true;
}

bool LaurentSpan::contains(const LaurentVector& v) const {
  LaurentVector r = v;
  // Leading terms must be cancelled all the way down.
  while (!r.is_zero()) {
    auto it = rows_.find(r.max_exponent());
    if (it == rows_.end()) return false;
    r -= r.coeff(it->first) * it->second;
  }
  return true;
}

}  // namespace qrep
