// Hand transcription of the coefficient systems, typed independently of the
// formula file so that the two sources can be compared.
#include "pql/coeffs/coeffs.hpp"

namespace pql::coeffs {
namespace {

struct Vars {
  RatExpr n = RatExpr::var("n"), q = RatExpr::var("q"), l = RatExpr::var("l");
  RatExpr beta = RatExpr::var("beta"), gamma = RatExpr::var("gamma"), k = RatExpr::var("k");
  RatExpr d = RatExpr::var("d"), sigma = RatExpr::var("sigma"), tau = RatExpr::var("tau");
  RatExpr delta = RatExpr::var("delta"), eps = RatExpr::var("epsilon"), rho = RatExpr::var("rho");

  RatExpr Ab = A_func(beta, n), As = A_func(sigma, n), Ad = A_func(delta, n), At = A_func(tau, n);
  RatExpr Bbs = B_func(beta, sigma, n, l), Bdt = B_func(delta, tau, n, l);
};

RatExpr sq(const RatExpr& x) { return pow(x, 2); }
RatExpr cu(const RatExpr& x) { return pow(x, 3); }

std::vector<RatExpr> full_system() {
  Vars v;
  auto& [n, q, l, beta, gamma, k, d, sigma, tau, delta, eps, rho, Ab, As, Ad, At, Bbs, Bdt] = v;
  (void)n, (void)eps, (void)rho;
  RatExpr g = 1L + q * gamma / 2L;
  RatExpr D = d * q / 2L * (1L + gamma);
  RatExpr kl = k + l;
  RatExpr ts = 2L * sigma - q, tt = 2L * tau - q;

  RatExpr s1 = cu(g) * Ab - k * (k + 1L) * sq(g) + q * gamma * sq(k) / 2L * g - 2L * k * (beta - 1L) * sq(g);

  RatExpr s2 = sq(g) * D * (2L * Ab + Ad) + (Bbs + (1L - q + 2L * sigma) * beta) * cu(g) +
               2L * (k - 1L) * beta * sq(g) * D - d * q * beta * gamma * kl * sq(g) +
               2L * beta * cu(g) * (kl * d - D * beta) - 2L * beta * (beta - 1L) * sq(g) * D +
               d * kl * sq(g) * (kl + 1L - 2L * beta) + sq(g) * D * (q * (1L + gamma) / 2L - 1L) * sq(beta) +
               d * q * (1L + gamma) * kl * sq(g) * beta + d * q * (1L + gamma) * sq(g) * (delta - 1L) * beta;

  RatExpr s3 = g * sq(D) * (Ab + 2L * Ad) + sq(g) * D * (2L * Bbs + Bdt) + As * cu(g) +
               k * ((k - 1L) * sq(D) - 2L * g * D) + q * gamma / 2L * g * sq(d) * sq(kl) -
               2L * k * kl * d * g * D -
               g * (2L * (beta - 1L) * d * kl * D + ts * (kl * d * g + k * D)) +
               d * kl * (-sq(g) + 2L * (kl - 1L) * g * D) +
               k * kl * sq(d) * q * (1L + gamma) * (q / 2L * (1L + gamma) - 1L) -
               kl * d * q * (1L + gamma) * (k * D + kl * d * g) -
               D * (tt * k * g + 2L * (delta - 1L) * (k * D + kl * d * g));

  RatExpr s4 = cu(D) * Ad + g * sq(D) * (Bbs + 2L * Bdt) + sq(g) * D * (2L * As + At) - k * sq(D) -
               ts * kl * d * g * D + d * kl * ((kl - 1L) * sq(D) - 2L * g * D) +
               D * (q * gamma / 2L * (1L + gamma) - 1L) * sq(kl) * sq(d) - 2L * d * sq(kl) * sq(D) -
               D * (2L * (delta - 1L) * kl * d * D + tt * (k * D + kl * d * g));

  RatExpr s5 = Bdt * cu(D) + (Ad + 2L * At) * g * sq(D) + (q - 1L - 2L * tau) * kl * d * sq(D);
  RatExpr s6 = cu(D) * At;
  return {s1, s2, s3, s4, s5, s6};
}

std::vector<RatExpr> reduced_system() {
  Vars v;
  RatExpr h = 1L - v.q / 2L;
  RatExpr m = v.l + (v.q / 2L - 1L) * v.beta;
  RatExpr s1 = (RatExpr(2L) / v.n * (1L + v.beta) - v.beta) * (1L + v.beta);
  RatExpr s2 = (v.Bbs + (2L * v.sigma + 1L - v.q) * v.beta) + v.d / h * (v.l + 1L + (v.q / 2L - 1L) * v.beta) * m;
  RatExpr s3 = v.As - sq(v.d) * v.q / 2L / sq(h) * sq(m) - v.d / h * m * (2L * v.sigma + 1L - v.q);
  return {s1, s2, s3};
}

std::vector<RatExpr> i_system() {
  Vars v;
  auto S = reduced_system();
  auto& [n, q, l, beta, gamma, k, d, sigma, tau, delta, eps, rho, Ab, As, Ad, At, Bbs, Bdt] = v;
  (void)n, (void)gamma, (void)Ab, (void)As, (void)Bbs;
  const RatExpr &S1 = S[0], &S2 = S[1], &S3 = S[2];
  RatExpr h = 1L - q / 2L;
  RatExpr kl = k + l;
  RatExpr ts = 2L * sigma - q, tt = 2L * tau - q;
  RatExpr dm = delta - 1L, bm = beta - 1L;
  RatExpr lq = l - k * q / (2L * h);
  RatExpr ll = (l - 1L) * l;  // note (1-l)l = -ll
  RatExpr d2 = sq(d), d3 = cu(d), d4 = pow(d, 4), kl2 = sq(kl);
  auto re = [&](long i, long j) { return pow(rho, i) * pow(eps, j); };

  RatExpr I1 = h * S1;

  RatExpr I2 = h * rho * eps * Ad + sq(k) * q * rho * eps / (2L * h) - 2L * dm * k * rho * eps +
               2L * bm * rho * eps * kl + k * l * q * rho * eps / h + k * q * rho * eps * kl / h -
               2L * k * rho * eps * kl / h + 2L * k * rho * eps * kl - ll * rho * eps +
               2L * h * S1 * (rho * eps + eps) + 2L * h * S1 * eps + h * S2;

  RatExpr I3 =
      h * S3 + 6L * h * S1 * sq(eps) + 4L * h * S2 * eps +
      re(2, 2) * (2L * h * Ad + sq(k) * q / h - 4L * dm * k + 2L * bm * kl + 2L * dm * kl + 2L * k * l * q / h -
                  2L * k * kl / h + 2L * kl2 / h - l * q * kl / h - q * kl2 / (2L * h) + 2L * k * kl - kl2 -
                  2L * ll + h * S1) +
      re(1, 1) * (h * Bdt + d * h * Ad + d * sq(k) * q / (2L * h) - 2L * d * dm * k + 4L * bm * d * kl -
                  2L * d * dm * kl + d * k * l * q / h + 3L * d * k * q * kl / h - 4L * d * k * kl / h +
                  d * q * kl2 / h + d * l * q * kl / h - 2L * d * kl2 / h + 4L * d * k * kl - d * ll +
                  2L * d * h * S1 + kl * ts - k * tt + l + 2L * h * S2) +
      re(1, 2) * (3L * h * Ad + 3L * sq(k) * q / (2L * h) - 6L * dm * k + 6L * bm * kl + 3L * k * l * q / h +
                  3L * k * q * kl / h - 4L * k * kl / h + 2L * kl * lq + 6L * k * kl - kl2 - 3L * ll +
                  6L * h * S1);

  RatExpr I4 =
      4L * h * S1 * cu(eps) + 6L * h * S2 * sq(eps) + 4L * h * S3 * eps +
      re(1, 1) * (d * h * Bdt + h * At + 2L * bm * d2 * kl - 2L * dm * d2 * kl + 5L * d2 * q * kl2 / (2L * h) +
                  2L * d2 * k * q * kl / h + d2 * l * q * kl / h - 4L * d2 * kl2 / h - 2L * d2 * k * kl / h +
                  2L * d2 * k * kl + 2L * d * kl * ts - d * kl * tt - d * k * tt + d * l + 2L * d * h * S2 +
                  2L * h * S3) +
      re(1, 2) * (3L * h * Bdt + 3L * d * h * Ad + 3L * d * sq(k) * q / (2L * h) - 6L * d * dm * k +
                  12L * bm * d * kl - 6L * d * dm * kl + 3L * d * k * l * q / h + 9L * d * k * q * kl / h -
                  8L * d * k * kl / h + 4L * d * kl * lq + 2L * d * q * kl2 / h + 3L * d * l * q * kl / h -
                  4L * d * kl2 / h + 12L * d * k * kl - 3L * d * kl2 - 3L * d * ll + 6L * d * h * S1 +
                  3L * kl * ts - 3L * k * tt + 3L * l + 6L * h * S2) +
      re(1, 3) * (3L * h * Ad + 3L * sq(k) * q / (2L * h) - 6L * dm * k + 6L * bm * kl + 3L * k * l * q / h +
                  3L * k * q * kl / h - 2L * k * kl / h + 4L * kl * lq + 6L * k * kl - 2L * kl2 - ll -
                  2L * ll + 6L * h * S1) +
      re(2, 2) * (2L * h * Bdt + 4L * d * h * Ad + 2L * d * sq(k) * q / h - 8L * d * dm * k + 6L * bm * d * kl +
                  2L * d * dm * kl + 4L * d * k * l * q / h + 2L * d * k * q * kl / h - 6L * d * k * kl / h +
                  6L * d * kl2 / h - d * l * q * kl / h - 3L * d * q * kl2 / (2L * h) + 6L * d * k * kl -
                  3L * d * kl2 - 4L * d * ll + 2L * d * h * S1 + kl * ts + kl * tt - 2L * k * tt + 2L * l +
                  h * S2) +
      re(2, 3) * (4L * h * Ad + 2L * sq(k) * q / h - 8L * dm * k + 4L * bm * kl + 4L * dm * kl +
                  4L * k * l * q / h - 2L * k * kl / h + 2L * kl2 / h + 2L * kl * lq - 2L * l * q * kl / h +
                  4L * k * kl - 2L * kl2 - 2L * ll - 2L * ll + 2L * h * S1) +
      re(3, 3) * (h * Ad + sq(k) * q / (2L * h) - 2L * dm * k + 2L * dm * kl + k * l * q / h - k * q * kl / h +
                  q * kl2 / (2L * h) - l * q * kl / h - ll);

  RatExpr I5 =
      h * S1 * pow(eps, 4) + 4L * h * S2 * cu(eps) + 6L * h * S3 * sq(eps) +
      re(1, 1) * (d * h * At + 3L * d3 * q * kl2 / (2L * h) - 2L * d3 * kl2 / h + d2 * kl * ts - d2 * kl * tt +
                  2L * d * h * S3) +
      re(1, 2) * (3L * d * h * Bdt + 3L * h * At + 6L * bm * d2 * kl - 6L * dm * d2 * kl + 2L * d2 * kl * lq +
                  11L * d2 * q * kl2 / (2L * h) + 6L * d2 * k * q * kl / h + 3L * d2 * l * q * kl / h -
                  8L * d2 * kl2 / h - 4L * d2 * k * kl / h - 3L * d2 * kl2 + 6L * d2 * k * kl +
                  6L * d * kl * ts - 3L * d * kl * tt - 3L * d * k * tt + 3L * d * l + 6L * d * h * S2 +
                  6L * h * S3) +
      re(1, 3) * (3L * h * Bdt + 3L * d * h * Ad + 3L * d * sq(k) * q / (2L * h) - 6L * d * dm * k +
                  12L * bm * d * kl - 6L * d * dm * kl + 3L * d * k * l * q / h + 9L * d * k * q * kl / h -
                  4L * d * k * kl / h + 8L * d * kl * lq + d * q * kl2 / h + 3L * d * l * q * kl / h -
                  2L * d * kl2 / h + 12L * d * k * kl - 6L * d * kl2 - 3L * d * ll + 6L * d * h * S1 +
                  3L * kl * ts - 3L * k * tt + 3L * l + 6L * h * S2) +
      re(2, 2) * (4L * d * h * Bdt + 2L * d2 * h * Ad + 2L * h * At + d2 * sq(k) * q / h - 4L * dm * d2 * k +
                  6L * bm * d2 * kl - 2L * dm * d2 * kl + 6L * d2 * kl2 / h + 2L * d2 * k * l * q / h +
                  4L * d2 * k * q * kl / h + d2 * l * q * kl / h - 6L * d2 * k * kl / h -
                  d2 * q * kl2 / (2L * h) - 3L * d2 * kl2 + 6L * d2 * k * kl - 2L * d2 * ll + d2 * h * S1 +
                  3L * d * kl * ts + d * kl * tt - 4L * d * k * tt + 4L * d * l + 2L * d * h * S2 + h * S3) +
      re(2, 3) * (4L * h * Bdt + 8L * d * h * Ad + 4L * d * sq(k) * q / h - 16L * d * dm * k +
                  12L * bm * d * kl + 4L * d * dm * kl + 8L * d * k * l * q / h + 4L * d * k * q * kl / h -
                  6L * d * k * kl / h + 6L * d * kl2 / h + 6L * d * kl * lq - 2L * d * l * q * kl / h +
                  12L * d * k * kl - 6L * d * kl2 - 8L * d * ll + 4L * d * h * S1 + 2L * kl * ts +
                  2L * kl * tt - 4L * k * tt + 4L * l + 2L * h * S2) +
      re(2, 4) * (2L * h * Ad + sq(k) * q / h - 4L * dm * k + 2L * bm * kl + 2L * dm * kl + 2L * k * l * q / h +
                  2L * kl * lq + q * kl2 / (2L * h) - l * q * kl / h + 2L * k * kl - kl2 - 2L * ll + h * S1) +
      re(3, 3) * (h * Bdt + 3L * d * h * Ad + 3L * d * sq(k) * q / (2L * h) - 6L * d * dm * k +
                  6L * d * dm * kl + 3L * d * k * l * q / h - 3L * d * k * q * kl / h +
                  3L * d * q * kl2 / (2L * h) - 3L * d * l * q * kl / h - 3L * d * ll + kl * tt - k * tt + l) +
      re(3, 4) * (h * Ad + sq(k) * q / (2L * h) - 2L * dm * k + 2L * dm * kl + k * l * q / h - k * q * kl / h +
                  q * kl2 / (2L * h) - l * q * kl / h - ll);

  RatExpr I6 =
      h * S2 * pow(eps, 4) + 4L * h * S3 * cu(eps) +
      re(1, 2) * (3L * d * h * At + 7L * d3 * q * kl2 / (2L * h) - 4L * d3 * kl2 / h - d3 * kl2 +
                  3L * d2 * kl * ts - 3L * d2 * kl * tt + 6L * d * h * S3) +
      re(1, 3) * (3L * d * h * Bdt + 3L * h * At + 6L * bm * d2 * kl - 6L * dm * d2 * kl + 4L * d2 * kl * lq +
                  7L * d2 * q * kl2 / (2L * h) + 6L * d2 * k * q * kl / h + 3L * d2 * l * q * kl / h -
                  4L * d2 * kl2 / h - 2L * d2 * k * kl / h - 6L * d2 * kl2 + 6L * d2 * k * kl +
                  6L * d * kl * ts - 3L * d * kl * tt - 3L * d * k * tt + 3L * d * l + 6L * d * h * S2 +
                  6L * h * S3) +
      re(1, 4) * (h * Bdt + d * h * Ad + d * sq(k) * q / (2L * h) - 2L * d * dm * k + 4L * bm * d * kl -
                  2L * d * dm * kl + d * k * l * q / h + 3L * d * k * q * kl / h + 4L * d * kl * lq +
                  d * l * q * kl / h + 4L * d * k * kl - 3L * d * kl2 - d * ll + 2L * d * h * S1 + kl * ts -
                  k * tt + l + 2L * h * S2) +
      re(2, 2) * (2L * d2 * h * Bdt + 4L * d * h * At + 2L * bm * d3 * kl - 2L * dm * d3 * kl +
                  2L * d3 * kl2 / h + 3L * d3 * q * kl2 / (2L * h) + 2L * d3 * k * q * kl / h +
                  d3 * l * q * kl / h - 2L * d3 * k * kl / h - d3 * kl2 + 2L * d3 * k * kl +
                  3L * d2 * kl * ts - d2 * kl * tt - 2L * d2 * k * tt + 2L * d2 * l + d2 * h * S2 +
                  2L * d * h * S3) +
      re(2, 3) * (8L * d * h * Bdt + 4L * d2 * h * Ad + 4L * h * At + 2L * d2 * sq(k) * q / h -
                  8L * dm * d2 * k + 12L * bm * d2 * kl - 4L * dm * d2 * kl + 6L * d2 * kl2 / h +
                  6L * d2 * kl * lq + 2L * d2 * q * kl2 / h + 4L * d2 * k * l * q / h +
                  8L * d2 * k * q * kl / h + 2L * d2 * l * q * kl / h - 6L * d2 * k * kl / h -
                  6L * d2 * kl2 + 12L * d2 * k * kl - 4L * d2 * ll + 2L * d2 * h * S1 + 6L * d * kl * ts +
                  2L * d * kl * tt - 8L * d * k * tt + 8L * d * l + 4L * d * h * S2 + 2L * h * S3) +
      re(2, 4) * (2L * h * Bdt + 4L * d * h * Ad + 2L * d * sq(k) * q / h - 8L * d * dm * k +
                  6L * bm * d * kl + 2L * d * dm * kl + 4L * d * k * l * q / h + 2L * d * k * q * kl / h +
                  6L * d * kl * lq + 3L * d * q * kl2 / (2L * h) - d * l * q * kl / h + 6L * d * k * kl -
                  3L * d * kl2 - 4L * d * ll + 2L * d * h * S1 + kl * ts + kl * tt - 2L * k * tt + 2L * l +
                  h * S2) +
      re(3, 3) * (3L * d * h * Bdt + 3L * d2 * h * Ad + h * At + 3L * d2 * sq(k) * q / (2L * h) -
                  6L * dm * d2 * k + 6L * dm * d2 * kl + 3L * d2 * q * kl2 / (2L * h) +
                  3L * d2 * k * l * q / h - 3L * d2 * k * q * kl / h - 3L * d2 * l * q * kl / h -
                  3L * d2 * ll + 3L * d * kl * tt - 3L * d * k * tt + 3L * d * l) +
      re(3, 4) * (h * Bdt + 3L * d * h * Ad + 3L * d * sq(k) * q / (2L * h) - 6L * d * dm * k +
                  6L * d * dm * kl + 3L * d * k * l * q / h - 3L * d * k * q * kl / h +
                  3L * d * q * kl2 / (2L * h) - 3L * d * l * q * kl / h - 3L * d * ll + kl * tt - k * tt + l);

  RatExpr I7 =
      h * S3 * pow(eps, 4) +
      re(1, 3) * (3L * d * h * At + 5L * d3 * q * kl2 / (2L * h) - 2L * d3 * kl2 / h - 2L * d3 * kl2 +
                  3L * d2 * kl * ts - 3L * d2 * kl * tt + 6L * d * h * S3) +
      re(1, 4) * (d * h * Bdt + h * At + 2L * bm * d2 * kl - 2L * dm * d2 * kl + 2L * d2 * kl * lq +
                  d2 * q * kl2 / (2L * h) + 2L * d2 * k * q * kl / h + d2 * l * q * kl / h - 3L * d2 * kl2 +
                  2L * d2 * k * kl + 2L * d * kl * ts - d * kl * tt - d * k * tt + d * l + 2L * d * h * S2 +
                  2L * h * S3) +
      re(2, 2) * (2L * d2 * h * At + d4 * q * kl2 / h + d3 * kl * ts - d3 * kl * tt + d2 * h * S3) +
      re(2, 3) * (4L * d2 * h * Bdt + 8L * d * h * At + 4L * bm * d3 * kl - 4L * dm * d3 * kl +
                  2L * d3 * kl2 / h + 2L * d3 * kl * lq + 4L * d3 * q * kl2 / h + 4L * d3 * k * q * kl / h +
                  2L * d3 * l * q * kl / h - 2L * d3 * k * kl / h - 2L * d3 * kl2 + 4L * d3 * k * kl +
                  6L * d2 * kl * ts - 2L * d2 * kl * tt - 4L * d2 * k * tt + 4L * d2 * l + 2L * d2 * h * S2 +
                  4L * d * h * S3) +
      re(2, 4) * (4L * d * h * Bdt + 2L * d2 * h * Ad + 2L * h * At + d2 * sq(k) * q / h - 4L * dm * d2 * k +
                  6L * bm * d2 * kl - 2L * dm * d2 * kl + 6L * d2 * kl * lq + 5L * d2 * q * kl2 / (2L * h) +
                  2L * d2 * k * l * q / h + 4L * d2 * k * q * kl / h + d2 * l * q * kl / h - 3L * d2 * kl2 +
                  6L * d2 * k * kl - 2L * d2 * ll + d2 * h * S1 + 3L * d * kl * ts + d * kl * tt -
                  4L * d * k * tt + 4L * d * l + 2L * d * h * S2 + h * S3) +
      re(3, 3) * (3L * d2 * h * Bdt + d3 * h * Ad + 3L * d * h * At + d3 * sq(k) * q / (2L * h) -
                  2L * dm * d3 * k + 2L * dm * d3 * kl + d3 * q * kl2 / (2L * h) + d3 * k * l * q / h -
                  d3 * k * q * kl / h - d3 * l * q * kl / h - d3 * ll + 3L * d2 * kl * tt - 3L * d2 * k * tt +
                  3L * d2 * l) +
      re(3, 4) * (3L * d * h * Bdt + 3L * d2 * h * Ad + h * At + 3L * d2 * sq(k) * q / (2L * h) -
                  6L * dm * d2 * k + 6L * dm * d2 * kl + 3L * d2 * q * kl2 / (2L * h) +
                  3L * d2 * k * l * q / h - 3L * d2 * k * q * kl / h - 3L * d2 * l * q * kl / h -
                  3L * d2 * ll + 3L * d * kl * tt - 3L * d * k * tt + 3L * d * l);

  // I8 needs the '+' between its first two brackets; without it the expansion claims fail.
  RatExpr I8 =
      re(1, 4) * (d * h * At + d3 * q * kl2 / (2L * h) - d3 * kl2 + d2 * kl * ts - d2 * kl * tt +
                  2L * d * h * S3) +
      re(2, 3) * (4L * d2 * h * At + 2L * d4 * q * kl2 / h + 2L * d3 * kl * ts - 2L * d3 * kl * tt +
                  2L * d2 * h * S3) +
      re(2, 4) * (2L * d2 * h * Bdt + 4L * d * h * At + 2L * bm * d3 * kl - 2L * dm * d3 * kl +
                  2L * d3 * kl * lq + 5L * d3 * q * kl2 / (2L * h) + 2L * d3 * k * q * kl / h +
                  d3 * l * q * kl / h - d3 * kl2 + 2L * d3 * k * kl + 3L * d2 * kl * ts - d2 * kl * tt -
                  2L * d2 * k * tt + 2L * d2 * l + d2 * h * S2 + 2L * d * h * S3) +
      re(3, 3) * (d3 * h * Bdt + 3L * d2 * h * At + d3 * kl * tt - d3 * k * tt + d3 * l) +
      re(3, 4) * (3L * d2 * h * Bdt + d3 * h * Ad + 3L * d * h * At + d3 * sq(k) * q / (2L * h) -
                  2L * dm * d3 * k + 2L * dm * d3 * kl + d3 * q * kl2 / (2L * h) + d3 * k * l * q / h -
                  d3 * k * q * kl / h - d3 * l * q * kl / h - d3 * ll + 3L * d2 * kl * tt - 3L * d2 * k * tt +
                  3L * d2 * l);

  RatExpr I9 = re(2, 4) * (2L * d2 * h * At + d4 * q * kl2 / h + d3 * kl * ts - d3 * kl * tt + d2 * h * S3) +
               re(3, 3) * d3 * h * At +
               re(3, 4) * (d3 * h * Bdt + 3L * d2 * h * At + d3 * kl * tt - d3 * k * tt + d3 * l);

  RatExpr I10 = re(3, 4) * d3 * h * At;

  return {I1, I2, I3, I4, I5, I6, I7, I8, I9, I10};
}

}  // namespace

CoeffSystem handcoded_system(SystemName name) {
  switch (name) {
    case SystemName::S_full:
      return {name, full_system()};
    case SystemName::S_reduced:
      return {name, reduced_system()};
    case SystemName::I_full:
      return {name, i_system()};
  }
  throw cas::Error("unknown coefficient system");
}

}  // namespace pql::coeffs
