#include <chrono>
#include <iostream>
#include <string>

#include "k3char/decomp.hpp"
#include "k3char/hilb.hpp"

using namespace k3char;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

LaurentPoly dense_operand(int rank, int span, int zspan) {
  std::vector<LaurentPoly::Term> raw;
  Exponent e(rank);
  auto rec = [&](auto&& self, int slot) -> void {
    if (slot == rank) {
      for (int z = -zspan; z <= zspan; ++z) {
        Exponent full = e;
        full.set_z(z);
        raw.push_back({full, Int(1 + slot + z)});
      }
      return;
    }
    for (int v = -span; v <= span; ++v) {
      e.set_t(slot, v);
      self(self, slot + 1);
    }
    e.set_t(slot, 0);
  };
  rec(rec, 0);
  return LaurentPoly::from_terms(rank, std::move(raw));
}

void bench_mul(int rank, int span, int zspan) {
  LaurentPoly a = dense_operand(rank, span, zspan);
  LaurentPoly b = dense_operand(rank, span, zspan);
  std::cout << "laurent_mul operands: " << a.term_count() << " x " << b.term_count()
            << " terms\n";

  auto t0 = Clock::now();
  LaurentPoly serial = laurent_mul_serial(a, b);
  double ts = seconds_since(t0);

  t0 = Clock::now();
  LaurentPoly parallel = laurent_mul(a, b);
  double tp = seconds_since(t0);

  std::cout << "  serial   " << ts << " s, " << serial.term_count() << " terms\n";
  std::cout << "  parallel " << tp << " s, " << parallel.term_count() << " terms\n";
  if (!(serial == parallel)) {
    std::cout << "  MISMATCH between serial and parallel products\n";
    std::exit(1);
  }
}

void bench_molien(int rank, int order) {
  auto t0 = Clock::now();
  GradedCharSeries pg(rank, order);
  double tb = seconds_since(t0);
  std::cout << "molien rank=" << rank << " order=" << order << ": build " << tb << " s, top "
            << pg.torus_part().coeff(order).term_count() << " terms\n";

  t0 = Clock::now();
  LaurentPoly mid = pg.slice(order, 0);
  std::cout << "  middle slice " << seconds_since(t0) << " s, " << mid.term_count()
            << " terms\n";
}

void bench_tables(int n_max) {
  auto t0 = Clock::now();
  auto tables = decompose_all(n_max);
  std::cout << "decompose_all(" << n_max << "): " << seconds_since(t0) << " s, "
            << tables.size() << " tables\n";
}

}  // namespace

int main(int argc, char** argv) {
  bool smoke = argc > 1 && std::string(argv[1]) == "--smoke";
  if (smoke) {
    bench_mul(2, 2, 1);
    bench_molien(5, 5);
    bench_tables(3);
    return 0;
  }
  bench_mul(3, 3, 2);
  bench_molien(8, 8);
  bench_molien(11, 8);
  bench_molien(11, 9);
  bench_tables(6);
  bench_tables(9);
  return 0;
}
