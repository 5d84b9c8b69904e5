#include "mckay/groups/element.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "mckay/errors.hpp"

namespace mckay::groups {

namespace {

CycloInt laplace(const CycloMat& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return CycloInt(1);
  CycloInt acc(0);
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      CycloInt minor = laplace(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      CycloInt term = m(row, c) * minor;
      acc = sign > 0 ? acc + term : acc - term;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

CycloInt determinant(const CycloMat& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), 0);
  return laplace(m, cols, 0);
}

GroupElement::GroupElement(CycloMat m) : m_(std::move(m)) {
  if (!m_.square() || m_.rows() == 0) throw std::invalid_argument("group element must be a nonempty square matrix");
  if (groups::determinant(m_).is_zero()) throw std::invalid_argument("group element must be invertible");
}

GroupElement GroupElement::identity(std::size_t n) { return GroupElement(CycloMat::identity(n)); }

GroupElement GroupElement::diagonal(unsigned m, const std::vector<long>& exponents) {
  CycloMat d(exponents.size(), exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) d(i, i) = CycloInt::root_of_unity(m, exponents[i]);
  return GroupElement(std::move(d));
}

GroupElement GroupElement::permutation(const std::vector<std::size_t>& perm) {
  CycloMat p(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) p(perm.at(j), j) = CycloInt(1);
  return GroupElement(std::move(p));
}

unsigned GroupElement::conductor() const {
  unsigned M = 1;
  for (const auto& x : m_.data()) M = std::lcm(M, x.conductor());
  return M;
}

CycloInt GroupElement::determinant() const { return groups::determinant(m_); }

bool GroupElement::is_diagonal() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (i != j && !m_(i, j).is_zero()) return false;
  return true;
}

std::vector<Int> GroupElement::key(unsigned M) const {
  std::vector<Int> out;
  out.reserve(m_.data().size() * exact::euler_phi(M));
  for (const auto& x : m_.data()) {
    CycloInt l = x.lifted(M);
    out.insert(out.end(), l.coeffs().begin(), l.coeffs().end());
  }
  return out;
}

GroupElement GroupElement::scaled(const CycloInt& s) const {
  GroupElement r = *this;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (!r.m_(i, j).is_zero()) r.m_(i, j) = r.m_(i, j) * s;
  return r;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  GroupElement r;
  r.m_ = a.m_ * b.m_;
  return r;
}

std::string GroupElement::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < dim(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < dim(); ++j) {
      if (j) out += ",";
      out += m_(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits the body of a bracketed list on top-level commas.
std::vector<std::string_view> split_list(std::string_view s, const char* what) {
  s = strip(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError(std::string("expected bracketed ") + what + ": '" + std::string(s) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets");
    if (s[i] == ',' && depth == 0) {
      parts.push_back(strip(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets");
  parts.push_back(strip(s.substr(start)));
  return parts;
}

}  // namespace

GroupElement parse_element(std::string_view text) {
  auto rows = split_list(text, "matrix");
  CycloMat m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto entries = split_list(rows[i], "row");
    if (entries.size() != rows.size()) throw ParseError("matrix must be square");
    for (std::size_t j = 0; j < entries.size(); ++j) m(i, j) = exact::parse_cyclo(entries[j]);
  }
  try {
    return GroupElement(std::move(m));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::vector<GroupElement> parse_generators(std::string_view text) {
  std::vector<GroupElement> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = text.find(';', start);
    std::string_view piece = strip(text.substr(start, pos == std::string_view::npos ? text.npos : pos - start));
    if (!piece.empty()) out.push_back(parse_element(piece));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (out.empty()) throw ParseError("no generators given");
  const std::size_t n = out.front().dim();
  for (const auto& g : out)
    if (g.dim() != n) throw ParseError("generators have different dimensions");
  return out;
}

}  // namespace mckay::groups
