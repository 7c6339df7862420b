#include "k3char/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

namespace k3char {

Family parse_family(const std::string& s) {
  if (s == "B" || s == "b") return Family::B;
  if (s == "D" || s == "d") return Family::D;
  throw DomainError("unsupported family '" + s + "' (expected B or D)");
}

std::string weight_to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

Weight parse_weight(const std::string& s) {
  Weight w;
  std::string body = s;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  if (body.empty()) return w;
  std::istringstream in(body);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw DomainError("malformed weight '" + s + "'");
    }
    while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
    if (used != part.size()) throw DomainError("malformed weight '" + s + "'");
    w.push_back(v);
  }
  return w;
}

Weight trimmed(const Weight& w) {
  Weight out = w;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Weight padded(const Weight& w, int rank) {
  if (static_cast<int>(w.size()) > rank)
    throw DomainError("weight longer than rank");
  Weight out = w;
  out.resize(static_cast<std::size_t>(rank), 0);
  return out;
}

int weight_norm1(const Weight& w) {
  int s = 0;
  for (int x : w) s += x < 0 ? -x : x;
  return s;
}

RootSystem build_root_system(Family family, int rank) {
  int min_rank = family == Family::B ? 1 : 2;
  if (rank < min_rank || rank > 15)
    throw DomainError("unsupported rank for family " +
                      std::string(1, family_letter(family)));
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      Weight a(static_cast<std::size_t>(rank), 0);
      a[static_cast<std::size_t>(i)] = 1;
      a[static_cast<std::size_t>(j)] = -1;
      rs.positive_roots.push_back(a);
      a[static_cast<std::size_t>(j)] = 1;
      rs.positive_roots.push_back(a);
    }
  }
  if (family == Family::B) {
    for (int i = 0; i < rank; ++i) {
      Weight a(static_cast<std::size_t>(rank), 0);
      a[static_cast<std::size_t>(i)] = 1;
      rs.positive_roots.push_back(a);
    }
  }
  rs.two_rho.resize(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i)
    rs.two_rho[static_cast<std::size_t>(i)] =
        family == Family::B ? 2 * (rank - 1 - i) + 1 : 2 * (rank - 1 - i);
  return rs;
}

bool is_dominant(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.size()) != rs.rank) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  if (w.empty()) return true;
  if (rs.family == Family::B) return w.back() >= 0;
  if (rs.rank >= 2) {
    int last = w.back();
    return w[w.size() - 2] >= (last < 0 ? -last : last);
  }
  return true;
}

namespace {

bool dominance_leq_exact(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  int r = rs.rank;
  long long s = 0;
  if (rs.family == Family::B) {
    for (int i = 0; i < r; ++i) {
      s += lam[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(i)];
      if (s < 0) return false;
    }
    return true;
  }
  for (int i = 0; i < r - 2; ++i) {
    s += lam[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(i)];
    if (s < 0) return false;
  }
  long long total = 0;
  for (int i = 0; i < r; ++i)
    total += lam[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(i)];
  if (total % 2 != 0 || total < 0) return false;
  long long dr = lam[static_cast<std::size_t>(r - 1)] - mu[static_cast<std::size_t>(r - 1)];
  return total / 2 - dr >= 0;
}

}  // namespace

bool dominance_leq(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  Weight lam = padded(lambda, rs.rank);
  Weight m = padded(mu, rs.rank);
  if (dominance_leq_exact(rs, lam, m)) return true;
  // Family D: a character invariant under single sign flips contains the
  // flipped orbit whenever it contains the original.
  if (rs.family == Family::D && m.back() != 0) {
    m.back() = -m.back();
    return dominance_leq_exact(rs, lam, m);
  }
  return false;
}

Int weyl_dim(const RootSystem& rs, const Weight& lambda) {
  Weight lam = padded(lambda, rs.rank);
  if (!is_dominant(rs, lam))
    throw DomainError("weyl_dim needs a dominant weight, got " + weight_to_string(lambda));
  Int num = 1, den = 1;
  for (const auto& a : rs.positive_roots) {
    long long n = 0, d = 0;
    for (int i = 0; i < rs.rank; ++i) {
      n += static_cast<long long>(2 * lam[static_cast<std::size_t>(i)] +
                                  rs.two_rho[static_cast<std::size_t>(i)]) *
           a[static_cast<std::size_t>(i)];
      d += static_cast<long long>(rs.two_rho[static_cast<std::size_t>(i)]) *
           a[static_cast<std::size_t>(i)];
    }
    num *= n;
    den *= d == 0 ? 1 : d;
    if (d == 0 && n != 0)
      throw ConsistencyError("degenerate root pairing in weyl_dim");
  }
  Int q, rem;
  boost::multiprecision::divide_qr(num, den, q, rem);
  if (rem != 0) throw ConsistencyError("weyl_dim product is not integral");
  if (q < 0) q = -q;
  return q;
}

Int orbit_size(const RootSystem& rs, const Weight& w) {
  Weight full = padded(w, rs.rank);
  std::map<int, int> counts;
  int nonzero = 0;
  for (int x : full) {
    ++counts[x < 0 ? -x : x];
    if (x != 0) ++nonzero;
  }
  Int perms = 1;
  for (int i = 2; i <= rs.rank; ++i) perms *= i;
  for (auto& [v, c] : counts)
    for (int i = 2; i <= c; ++i) perms /= i;
  return perms << nonzero;
}

namespace {

// All nonincreasing part lists with at most maxparts parts summing to <= total.
void partitions_upto(int total, int maxparts, std::vector<Weight>& out) {
  Weight cur;
  out.push_back(cur);
  struct Rec {
    static void go(int rem, int maxpart, int maxparts, Weight& cur, std::vector<Weight>& out) {
      if (static_cast<int>(cur.size()) == maxparts) return;
      for (int p = std::min(rem, maxpart); p >= 1; --p) {
        cur.push_back(p);
        out.push_back(cur);
        go(rem - p, p, maxparts, cur, out);
        cur.pop_back();
      }
    }
  };
  Rec::go(total, total, maxparts, cur, out);
}

Weight abs_sorted(const Weight& w) {
  Weight out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] < 0 ? -w[i] : w[i];
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

long long c2(const RootSystem& rs, const Weight& full) {
  long long s = 0;
  for (int i = 0; i < rs.rank; ++i) {
    long long v = 2LL * full[static_cast<std::size_t>(i)] +
                  rs.two_rho[static_cast<std::size_t>(i)];
    s += v * v;
  }
  return s;
}

std::map<Weight, Int> freudenthal_impl(const RootSystem& rs, const Weight& lam) {
  int norm = weight_norm1(lam);
  std::vector<Weight> parts;
  partitions_upto(norm, rs.rank, parts);
  std::vector<Weight> cands;
  for (auto& p : parts) {
    if (rs.family == Family::D && (norm - weight_norm1(p)) % 2 != 0) continue;
    Weight full = padded(p, rs.rank);
    if (!dominance_leq(rs, lam, full)) continue;
    cands.push_back(std::move(full));
  }
  std::sort(cands.begin(), cands.end(), [&](const Weight& a, const Weight& b) {
    return c2(rs, a) > c2(rs, b);
  });

  long long clam = c2(rs, lam);
  std::map<Weight, Int> mult;
  for (const auto& mu : cands) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    Int s = 0;
    Weight w(static_cast<std::size_t>(rs.rank));
    for (const auto& a : rs.positive_roots) {
      for (int k = 1; k <= norm + 1; ++k) {
        long long pairing = 0;
        for (int i = 0; i < rs.rank; ++i) {
          w[static_cast<std::size_t>(i)] =
              mu[static_cast<std::size_t>(i)] + k * a[static_cast<std::size_t>(i)];
          pairing += static_cast<long long>(w[static_cast<std::size_t>(i)]) *
                     a[static_cast<std::size_t>(i)];
        }
        auto it = mult.find(abs_sorted(w));
        if (it == mult.end() || it->second == 0) break;  // strings have no gaps above
        s += it->second * pairing;
      }
    }
    long long denom = clam - c2(rs, mu);
    if (denom <= 0)
      throw ConsistencyError("freudenthal candidate ordering failed");
    Int val = 8 * s;
    Int q, rem;
    boost::multiprecision::divide_qr(val, Int(denom), q, rem);
    if (rem != 0 || q < 0)
      throw ConsistencyError("freudenthal recursion produced a non-multiplicity");
    if (q > 0) mult[mu] = q;
  }
  for (auto it = mult.begin(); it != mult.end();) {
    it = it->second == 0 ? mult.erase(it) : std::next(it);
  }

  Int total = 0;
  for (const auto& [mu, m] : mult) total += m * orbit_size(rs, mu);
  if (total != weyl_dim(rs, lam))
    throw ConsistencyError("freudenthal multiplicities disagree with the Weyl dimension");
  return mult;
}

}  // namespace

std::map<Weight, Int> freudenthal_mults(const RootSystem& rs, const Weight& lambda) {
  Weight lam = padded(lambda, rs.rank);
  if (!is_dominant(rs, lam))
    throw DomainError("freudenthal_mults needs a dominant weight");
  if (rs.family == Family::D && lam.back() != 0)
    throw HalfSpinError("ambiguous half-spin pair: D-type weight with nonzero last coordinate");

  struct Key {
    Family f;
    int r;
    Weight lam;
    bool operator<(const Key& o) const {
      if (f != o.f) return f < o.f;
      if (r != o.r) return r < o.r;
      return lam < o.lam;
    }
  };
  static std::map<Key, std::map<Weight, Int>> cache;
  static std::mutex cache_mutex;
  Key key{rs.family, rs.rank, lam};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto result = freudenthal_impl(rs, lam);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

std::vector<Weight> branch_B_to_D(const Weight& lambda) {
  int r = static_cast<int>(lambda.size());
  RootSystem rs = build_root_system(Family::B, r);
  Weight lam = lambda;
  if (!is_dominant(rs, lam))
    throw DomainError("branch_B_to_D needs a dominant B-type weight");
  std::vector<Weight> out;
  Weight cur(static_cast<std::size_t>(r));
  struct Rec {
    static void go(const Weight& lam, int i, Weight& cur, std::vector<Weight>& out) {
      int r = static_cast<int>(lam.size());
      if (i == r - 1) {
        for (int v = lam[static_cast<std::size_t>(r - 1)];
             v >= -lam[static_cast<std::size_t>(r - 1)]; --v) {
          cur[static_cast<std::size_t>(r - 1)] = v;
          out.push_back(cur);
        }
        return;
      }
      for (int v = lam[static_cast<std::size_t>(i)]; v >= lam[static_cast<std::size_t>(i + 1)];
           --v) {
        cur[static_cast<std::size_t>(i)] = v;
        go(lam, i + 1, cur, out);
      }
    }
  };
  Rec::go(lam, 0, cur, out);
  return out;
}

}  // namespace k3char
