#include "k3char/laurent.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3char {

namespace {

using Term = LaurentPoly::Term;

std::vector<Term> merge_two(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].e < b[j].e) {
      out.push_back(a[i++]);
    } else if (b[j].e < a[i].e) {
      out.push_back(b[j++]);
    } else {
      Int c = a[i].c + b[j].c;
      if (c != 0) out.push_back({a[i].e, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

// Each row of the product (one term of a times all of b) is already sorted,
// so the full product is a balanced merge of the rows. The tree shape is
// fixed by the row count, which keeps results independent of scheduling.
std::vector<std::vector<Term>> product_rows(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<std::vector<Term>> rows;
  rows.reserve(a.term_count());
  for (const auto& ta : a.terms()) {
    std::vector<Term> row;
    row.reserve(b.term_count());
    for (const auto& tb : b.terms()) row.push_back({ta.e + tb.e, ta.c * tb.c});
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Term> merge_tree(std::vector<std::vector<Term>> rows, bool parallel) {
  if (rows.empty()) return {};
  while (rows.size() > 1) {
    std::size_t pairs = rows.size() / 2;
    std::vector<std::vector<Term>> next(pairs + rows.size() % 2);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long p = 0; p < static_cast<long long>(pairs); ++p) {
      auto idx = static_cast<std::size_t>(p);
      next[idx] = merge_two(rows[2 * idx], rows[2 * idx + 1]);
    }
    if (rows.size() % 2) next.back() = std::move(rows.back());
    rows = std::move(next);
  }
  return std::move(rows.front());
}

LaurentPoly mul_impl(const LaurentPoly& a, const LaurentPoly& b, bool parallel) {
  if (a.rank() != b.rank() && !a.is_zero() && !b.is_zero())
    throw DomainError("poly rank mismatch in mul");
  if (a.is_zero() || b.is_zero()) return LaurentPoly(std::max(a.rank(), b.rank()));
  const LaurentPoly& small = a.term_count() <= b.term_count() ? a : b;
  const LaurentPoly& big = a.term_count() <= b.term_count() ? b : a;
  auto merged = merge_tree(product_rows(small, big), parallel);
  LaurentPoly out(a.rank());
  return LaurentPoly::from_terms(a.rank(), std::move(merged));
}

}  // namespace

void LaurentPoly::accumulate_shifted(const LaurentPoly& src, const Exponent& shift,
                                     const Int& scale) {
  if (scale == 0 || src.terms_.empty()) return;
  if (rank_ != src.rank_) throw DomainError("poly rank mismatch in accumulate");
  if (&src == this) {
    *this += src.shifted_scaled(shift, scale);
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + src.terms_.size());
  std::size_t i = 0, j = 0;
  Exponent se = src.terms_[0].e + shift;
  while (i < terms_.size() && j < src.terms_.size()) {
    if (terms_[i].e < se) {
      out.push_back(std::move(terms_[i++]));
    } else if (se < terms_[i].e) {
      out.push_back({se, src.terms_[j].c * scale});
      if (++j < src.terms_.size()) se = src.terms_[j].e + shift;
    } else {
      Int c = terms_[i].c + src.terms_[j].c * scale;
      if (c != 0) out.push_back({se, std::move(c)});
      ++i;
      if (++j < src.terms_.size()) se = src.terms_[j].e + shift;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < src.terms_.size(); ++j)
    out.push_back({src.terms_[j].e + shift, src.terms_[j].c * scale});
  terms_ = std::move(out);
}

LaurentPoly laurent_mul_serial(const LaurentPoly& a, const LaurentPoly& b) {
  return mul_impl(a, b, false);
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
  return mul_impl(a, b, true);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.c.str();
    bool star = false;
    for (int i = 0; i < rank_; ++i) {
      if (t.e.t(i) == 0) continue;
      os << (star ? " " : " * ");
      star = true;
      os << "t" << (i + 1) << "^" << t.e.t(i);
    }
    if (t.e.z() != 0) os << " * z^" << t.e.z();
  }
  return os.str();
}

namespace {

Int parse_int(const std::string& s) {
  if (s.empty()) throw DomainError("empty integer in polynomial text");
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw DomainError("bad integer '" + s + "' in polynomial text");
  }
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

}  // namespace

LaurentPoly parse_laurent(const std::string& text, int rank) {
  std::string body = text;
  if (body == "0") return LaurentPoly(rank);
  std::vector<LaurentPoly::Term> raw;
  for (const auto& term_text : split(body, " + ")) {
    auto chunks = split(term_text, " * ");
    if (chunks.empty() || chunks.size() > 3) throw DomainError("malformed term '" + term_text + "'");
    Int c = parse_int(chunks[0]);
    Exponent e(rank);
    for (std::size_t ci = 1; ci < chunks.size(); ++ci) {
      for (const auto& factor : split(chunks[ci], " ")) {
        if (factor.empty()) throw DomainError("malformed factor in '" + term_text + "'");
        std::size_t caret = factor.find('^');
        if (caret == std::string::npos) throw DomainError("missing exponent in '" + factor + "'");
        int power = std::stoi(factor.substr(caret + 1));
        if (factor[0] == 'z') {
          if (caret != 1) throw DomainError("malformed factor '" + factor + "'");
          e.set_z(power);
        } else if (factor[0] == 't') {
          int idx = std::stoi(factor.substr(1, caret - 1));
          if (idx < 1 || idx > rank) throw DomainError("variable index out of range in '" + factor + "'");
          e.set_t(idx - 1, power);
        } else {
          throw DomainError("unknown variable in '" + factor + "'");
        }
      }
    }
    raw.push_back({std::move(e), std::move(c)});
  }
  return LaurentPoly::from_terms(rank, std::move(raw));
}

}  // namespace k3char
