#include "cayley_k0/int_matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace cayley_k0::exact_linalg {

int_matrix::int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_)
      throw std::invalid_argument("int_matrix: ragged initializer");
    for (long v : row) data_.emplace_back(v);
  }
}

int_matrix int_matrix::identity(std::size_t n) {
  int_matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

int_matrix int_matrix::transpose() const {
  int_matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void int_matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void int_matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void int_matrix::add_row_multiple(std::size_t a, std::size_t b, const Int& q) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += q * (*this)(b, j);
}

void int_matrix::add_col_multiple(std::size_t a, std::size_t b, const Int& q) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += q * (*this)(i, b);
}

void int_matrix::negate_col(std::size_t a) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
}

int_matrix operator+(const int_matrix& a, const int_matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix addition: shape mismatch");
  int_matrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    r.data_[k] = a.data_[k] + b.data_[k];
  return r;
}

int_matrix operator-(const int_matrix& a, const int_matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix subtraction: shape mismatch");
  int_matrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    r.data_[k] = a.data_[k] - b.data_[k];
  return r;
}

int_matrix operator*(const int_matrix& a, const int_matrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product: shape mismatch");
  int_matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

int_matrix int_matrix::parse(std::istream& in) {
  std::string line;
  auto next_payload_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_payload_line(header))
    throw std::invalid_argument("matrix parse: empty input");
  std::istringstream hs(header);
  long rows = -1, cols = -1;
  if (!(hs >> rows >> cols) || rows <= 0 || cols <= 0)
    throw std::invalid_argument("matrix parse: bad header '" + header + "'");
  std::string trailing;
  if (hs >> trailing)
    throw std::invalid_argument("matrix parse: trailing data in header");

  int_matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long i = 0; i < rows; ++i) {
    std::string row;
    if (!next_payload_line(row))
      throw std::invalid_argument("matrix parse: not enough rows");
    std::istringstream rs(row);
    std::string tok;
    for (long j = 0; j < cols; ++j) {
      if (!(rs >> tok))
        throw std::invalid_argument("matrix parse: short row " +
                                    std::to_string(i + 1));
      try {
        m(i, j) = Int(tok);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("matrix parse: bad integer '" + tok + "'");
      }
    }
    if (rs >> tok)
      throw std::invalid_argument("matrix parse: long row " +
                                  std::to_string(i + 1));
  }
  return m;
}

int_matrix int_matrix::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string int_matrix::to_text() const {
  std::ostringstream out;
  out << rows_ << ' ' << cols_ << '\n';
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << (*this)(i, j).get_str();
    }
    out << '\n';
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const int_matrix& m) {
  return out << m.to_text();
}

}  // namespace cayley_k0::exact_linalg
