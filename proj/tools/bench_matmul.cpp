// Compares the OpenMP matrix product against the serial reference kernel on
// random rational matrices and checks that they agree.

#include <chrono>
#include <cstdio>
#include <random>

#include "unigen/matrix.hpp"

namespace {

unigen::QMat random_matrix(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  unigen::QMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = unigen::Rat(num(rng), den(rng));
  return m;
}

template <class F>
double time_of(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = argc > 1 ? std::atoi(argv[1]) : 256;
  std::mt19937 rng(7);
  std::printf("n\tserial(s)\tomp(s)\tspeedup\n");
  for (int n = 32; n <= max_n; n *= 2) {
    unigen::QMat a = random_matrix(n, rng), b = random_matrix(n, rng);
    unigen::QMat cs, cp;
    double ts = time_of([&] { cs = unigen::mul_serial(a, b); });
    double tp = time_of([&] { cp = unigen::mul(a, b); });
    if (!(cs == cp)) {
      std::fprintf(stderr, "MISMATCH at n=%d\n", n);
      return 1;
    }
    std::printf("%d\t%.3f\t%.3f\t%.2fx\n", n, ts, tp, tp > 0 ? ts / tp : 0.0);
  }
  return 0;
}
