#include "pearllab/rh.hpp"

#include <cmath>
#include <stdexcept>

namespace pearllab {

OhDimensions oh_dimensions(const std::vector<long>& kappa) {
  if (kappa.empty()) throw std::invalid_argument("empty partial index vector");
  OhDimensions d;
  for (long k : kappa) {
    if (k >= 0) d.ker += k + 1;
    if (k <= -1) d.coker += -k - 1;
    d.index += k;
  }
  d.index += static_cast<long>(kappa.size());
  return d;
}

bool is_regular(const std::vector<long>& kappa) {
  for (long k : kappa)
    if (k < -1) return false;
  return true;
}

bool is_nonneg(const std::vector<long>& kappa) {
  for (long k : kappa)
    if (k < 0) return false;
  return true;
}

namespace {

void enumerate_rec(long mu, long n, long min, std::vector<long>& cur,
                   std::vector<std::vector<long>>& out) {
  if (n == 1) {
    if (mu >= min) {
      cur.push_back(mu);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (long k = min; k * n <= mu; ++k) {
    cur.push_back(k);
    enumerate_rec(mu - k, n - 1, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> enumerate_cases(long mu, long n) {
  if (mu < 0 || n < 1) throw std::invalid_argument("need mu >= 0 and n >= 1");
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  enumerate_rec(mu, n, 0, cur, out);
  return out;
}

Kappa1Evaluation kappa1_evaluation(double a1, double a2) {
  Kappa1Evaluation e;
  e.m = {2 * std::cos(a1 / 2), -2 * std::sin(a1 / 2),  //
         2 * std::cos(a2 / 2), -2 * std::sin(a2 / 2)};
  e.det = e.m[0] * e.m[3] - e.m[1] * e.m[2];
  return e;
}

}  // namespace pearllab
