// Copyright 2026 The AQL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aql/cobyla.hpp"

#include <algorithm>
#include <cmath>

#include "aql/error.hpp"

// Port of M. J. D. Powell's COBYLA (1992). The index arithmetic of the
// original is kept 1-based behind small accessors so that trstlp and the
// driver can be read side by side with the reference routine; labels mark
// the original statement numbers.

namespace aql {
namespace {

class Vec1 {
 public:
  explicit Vec1(int n) : data_(static_cast<std::size_t>(std::max(n, 0)), 0.0) {}
  double& operator()(int i) { return data_[static_cast<std::size_t>(i - 1)]; }
  double operator()(int i) const { return data_[static_cast<std::size_t>(i - 1)]; }

 private:
  std::vector<double> data_;
};

class IVec1 {
 public:
  explicit IVec1(int n) : data_(static_cast<std::size_t>(std::max(n, 0)), 0) {}
  int& operator()(int i) { return data_[static_cast<std::size_t>(i - 1)]; }

 private:
  std::vector<int> data_;
};

class Mat1 {
 public:
  Mat1(int rows, int cols)
      : rows_(rows), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0) {}
  double& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(j - 1) * rows_ + static_cast<std::size_t>(i - 1)];
  }

 private:
  std::size_t rows_;
  std::vector<double> data_;
};

struct TrstlpWork {
  TrstlpWork(int n, int m)
      : z(n, n), zdota(n), vmultc(m + 1), sdirn(n), dxnew(n), vmultd(m + 1), iact(m + 1) {}
  Mat1 z;
  Vec1 zdota, vmultc, sdirn, dxnew, vmultd;
  IVec1 iact;
};

// Computes a step dx with ‖dx‖ ≤ rho that first minimizes the greatest
// violation of the linearized constraints a(:,k)ᵀdx ≥ b(k), k = 1..m, and
// then uses any remaining freedom to minimize −a(:,m+1)ᵀdx. ifull = 0 when a
// degeneracy stops dx short of the trust-region boundary.
void trstlp(int n, int m, Mat1& a, Vec1& b, double rho, Vec1& dx, int& ifull, TrstlpWork& w) {
  Mat1& z = w.z;
  Vec1& zdota = w.zdota;
  Vec1& vmultc = w.vmultc;
  Vec1& sdirn = w.sdirn;
  Vec1& dxnew = w.dxnew;
  Vec1& vmultd = w.vmultd;
  IVec1& iact = w.iact;

  int mcon, nact, icon, k, kk, kp, kw, kl, isave, nactx = 0, icount = 0;
  double resmax, optold = 0.0, optnew, tot, temp, alpha, beta, sp, spabs, acca, accb, ratio,
      zdotv, zdvabs, vsave, dd, ss, sd, stpful, step, zdotw, zdwabs, resold = 0.0, sumabs, sum,
      tempa;

  ifull = 1;
  mcon = m;
  nact = 0;
  resmax = 0.0;
  icon = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) z(i, j) = 0.0;
    z(i, i) = 1.0;
    dx(i) = 0.0;
  }
  if (m >= 1) {
    for (k = 1; k <= m; ++k) {
      if (b(k) > resmax) {
        resmax = b(k);
        icon = k;
      }
    }
    for (k = 1; k <= m; ++k) {
      iact(k) = k;
      vmultc(k) = resmax - b(k);
    }
  }
  if (resmax == 0.0) goto L480;
  for (int i = 1; i <= n; ++i) sdirn(i) = 0.0;

  // End the stage after three iterations without progress, which prevents cycling.
L60:
  optold = 0.0;
  icount = 0;
L70:
  if (mcon == m) {
    optnew = resmax;
  } else {
    optnew = 0.0;
    for (int i = 1; i <= n; ++i) optnew -= dx(i) * a(i, mcon);
  }
  if (icount == 0 || optnew < optold) {
    optold = optnew;
    nactx = nact;
    icount = 3;
  } else if (nact > nactx) {
    nactx = nact;
    icount = 3;
  } else {
    --icount;
    if (icount == 0) goto L490;
  }

  // Add constraint iact(icon) to the active set, rotating the trailing
  // columns of z orthogonal to its gradient.
  if (icon <= nact) goto L260;
  kk = iact(icon);
  for (int i = 1; i <= n; ++i) dxnew(i) = a(i, kk);
  tot = 0.0;
  k = n;
L100:
  if (k > nact) {
    sp = 0.0;
    spabs = 0.0;
    for (int i = 1; i <= n; ++i) {
      temp = z(i, k) * dxnew(i);
      sp += temp;
      spabs += std::abs(temp);
    }
    acca = spabs + 0.1 * std::abs(sp);
    accb = spabs + 0.2 * std::abs(sp);
    if (spabs >= acca || acca >= accb) sp = 0.0;
    if (tot == 0.0) {
      tot = sp;
    } else {
      kp = k + 1;
      temp = std::sqrt(sp * sp + tot * tot);
      alpha = sp / temp;
      beta = tot / temp;
      tot = temp;
      for (int i = 1; i <= n; ++i) {
        temp = alpha * z(i, k) + beta * z(i, kp);
        z(i, kp) = alpha * z(i, kp) - beta * z(i, k);
        z(i, k) = temp;
      }
    }
    --k;
    goto L100;
  }

  if (tot != 0.0) {
    ++nact;
    zdota(nact) = tot;
    vmultc(icon) = vmultc(nact);
    vmultc(nact) = 0.0;
    goto L210;
  }

  // The new gradient is a combination of the active ones: pick a constraint
  // to drop using the multipliers of that combination.
  ratio = -1.0;
  k = nact;
L130:
  zdotv = 0.0;
  zdvabs = 0.0;
  for (int i = 1; i <= n; ++i) {
    temp = z(i, k) * dxnew(i);
    zdotv += temp;
    zdvabs += std::abs(temp);
  }
  acca = zdvabs + 0.1 * std::abs(zdotv);
  accb = zdvabs + 0.2 * std::abs(zdotv);
  if (zdvabs < acca && acca < accb) {
    temp = zdotv / zdota(k);
    if (temp > 0.0 && iact(k) <= m) {
      tempa = vmultc(k) / temp;
      if (ratio < 0.0 || tempa < ratio) ratio = tempa;
    }
    if (k >= 2) {
      kw = iact(k);
      for (int i = 1; i <= n; ++i) dxnew(i) -= temp * a(i, kw);
    }
    vmultd(k) = temp;
  } else {
    vmultd(k) = 0.0;
  }
  --k;
  if (k > 0) goto L130;
  if (ratio < 0.0) goto L490;

  for (k = 1; k <= nact; ++k) vmultc(k) = std::max(0.0, vmultc(k) - ratio * vmultd(k));
  if (icon < nact) {
    isave = iact(icon);
    vsave = vmultc(icon);
    k = icon;
  L170:
    kp = k + 1;
    kw = iact(kp);
    sp = 0.0;
    for (int i = 1; i <= n; ++i) sp += z(i, k) * a(i, kw);
    temp = std::sqrt(sp * sp + zdota(kp) * zdota(kp));
    alpha = zdota(kp) / temp;
    beta = sp / temp;
    zdota(kp) = alpha * zdota(k);
    zdota(k) = temp;
    for (int i = 1; i <= n; ++i) {
      temp = alpha * z(i, kp) + beta * z(i, k);
      z(i, kp) = alpha * z(i, k) - beta * z(i, kp);
      z(i, k) = temp;
    }
    iact(k) = kw;
    vmultc(k) = vmultc(kp);
    k = kp;
    if (k < nact) goto L170;
    iact(k) = isave;
    vmultc(k) = vsave;
  }
  temp = 0.0;
  for (int i = 1; i <= n; ++i) temp += z(i, nact) * a(i, kk);
  if (temp == 0.0) goto L490;
  zdota(nact) = temp;
  vmultc(icon) = 0.0;
  vmultc(nact) = ratio;

  // Keep the objective as the last active constraint in stage two.
L210:
  iact(icon) = iact(nact);
  iact(nact) = kk;
  if (mcon > m && kk != mcon) {
    k = nact - 1;
    sp = 0.0;
    for (int i = 1; i <= n; ++i) sp += z(i, k) * a(i, kk);
    temp = std::sqrt(sp * sp + zdota(nact) * zdota(nact));
    alpha = zdota(nact) / temp;
    beta = sp / temp;
    zdota(nact) = alpha * zdota(k);
    zdota(k) = temp;
    for (int i = 1; i <= n; ++i) {
      temp = alpha * z(i, nact) + beta * z(i, k);
      z(i, nact) = alpha * z(i, k) - beta * z(i, nact);
      z(i, k) = temp;
    }
    iact(nact) = iact(k);
    iact(k) = kk;
    temp = vmultc(k);
    vmultc(k) = vmultc(nact);
    vmultc(nact) = temp;
  }

  if (mcon > m) goto L320;
  kk = iact(nact);
  temp = 0.0;
  for (int i = 1; i <= n; ++i) temp += sdirn(i) * a(i, kk);
  temp = (temp - 1.0) / zdota(nact);
  for (int i = 1; i <= n; ++i) sdirn(i) -= temp * z(i, nact);
  goto L340;

  // Delete constraint iact(icon) from the active set.
L260:
  if (icon < nact) {
    isave = iact(icon);
    vsave = vmultc(icon);
    k = icon;
  L270:
    kp = k + 1;
    kk = iact(kp);
    sp = 0.0;
    for (int i = 1; i <= n; ++i) sp += z(i, k) * a(i, kk);
    temp = std::sqrt(sp * sp + zdota(kp) * zdota(kp));
    alpha = zdota(kp) / temp;
    beta = sp / temp;
    zdota(kp) = alpha * zdota(k);
    zdota(k) = temp;
    for (int i = 1; i <= n; ++i) {
      temp = alpha * z(i, kp) + beta * z(i, k);
      z(i, kp) = alpha * z(i, k) - beta * z(i, kp);
      z(i, k) = temp;
    }
    iact(k) = kk;
    vmultc(k) = vmultc(kp);
    k = kp;
    if (k < nact) goto L270;
    iact(k) = isave;
    vmultc(k) = vsave;
  }
  --nact;

  if (mcon > m) goto L320;
  temp = 0.0;
  for (int i = 1; i <= n; ++i) temp += sdirn(i) * z(i, nact + 1);
  for (int i = 1; i <= n; ++i) sdirn(i) -= temp * z(i, nact + 1);
  goto L340;

  // Stage-two search direction.
L320:
  temp = 1.0 / zdota(nact);
  for (int i = 1; i <= n; ++i) sdirn(i) = temp * z(i, nact);

  // Step to the trust-region boundary, or the step that zeroes resmax.
L340:
  dd = rho * rho;
  sd = 0.0;
  ss = 0.0;
  for (int i = 1; i <= n; ++i) {
    if (std::abs(dx(i)) >= 1.0e-6 * rho) dd -= dx(i) * dx(i);
    sd += dx(i) * sdirn(i);
    ss += sdirn(i) * sdirn(i);
  }
  if (dd <= 0.0) goto L490;
  temp = std::sqrt(ss * dd);
  if (std::abs(sd) >= 1.0e-6 * temp) temp = std::sqrt(ss * dd + sd * sd);
  stpful = dd / (temp + sd);
  step = stpful;
  if (mcon == m) {
    acca = step + 0.1 * resmax;
    accb = step + 0.2 * resmax;
    if (step >= acca || acca >= accb) goto L480;
    step = std::min(step, resmax);
  }

  for (int i = 1; i <= n; ++i) dxnew(i) = dx(i) + step * sdirn(i);
  if (mcon == m) {
    resold = resmax;
    resmax = 0.0;
    for (k = 1; k <= nact; ++k) {
      kk = iact(k);
      temp = b(kk);
      for (int i = 1; i <= n; ++i) temp -= a(i, kk) * dxnew(i);
      resmax = std::max(resmax, temp);
    }
  }

  // Multipliers the active set would have at dxnew, with rounding-level
  // values forced to zero.
  k = nact;
L390:
  zdotw = 0.0;
  zdwabs = 0.0;
  for (int i = 1; i <= n; ++i) {
    temp = z(i, k) * dxnew(i);
    zdotw += temp;
    zdwabs += std::abs(temp);
  }
  acca = zdwabs + 0.1 * std::abs(zdotw);
  accb = zdwabs + 0.2 * std::abs(zdotw);
  if (zdwabs >= acca || acca >= accb) zdotw = 0.0;
  vmultd(k) = zdotw / zdota(k);
  if (k >= 2) {
    kk = iact(k);
    for (int i = 1; i <= n; ++i) dxnew(i) -= vmultd(k) * a(i, kk);
    --k;
    goto L390;
  }
  if (mcon > m) vmultd(nact) = std::max(0.0, vmultd(nact));

  for (int i = 1; i <= n; ++i) dxnew(i) = dx(i) + step * sdirn(i);
  if (mcon > nact) {
    kl = nact + 1;
    for (k = kl; k <= mcon; ++k) {
      kk = iact(k);
      sum = resmax - b(kk);
      sumabs = resmax + std::abs(b(kk));
      for (int i = 1; i <= n; ++i) {
        temp = a(i, kk) * dxnew(i);
        sum += temp;
        sumabs += std::abs(temp);
      }
      acca = sumabs + 0.1 * std::abs(sum);
      accb = sumabs + 0.2 * std::abs(sum);
      if (sumabs >= acca || acca >= accb) sum = 0.0;
      vmultd(k) = sum;
    }
  }

  // Fraction of the step that keeps every multiplier and residual nonnegative.
  ratio = 1.0;
  icon = 0;
  for (k = 1; k <= mcon; ++k) {
    if (vmultd(k) < 0.0) {
      temp = vmultc(k) / (vmultc(k) - vmultd(k));
      if (temp < ratio) {
        ratio = temp;
        icon = k;
      }
    }
  }

  temp = 1.0 - ratio;
  for (int i = 1; i <= n; ++i) dx(i) = temp * dx(i) + ratio * dxnew(i);
  for (k = 1; k <= mcon; ++k) vmultc(k) = std::max(0.0, temp * vmultc(k) + ratio * vmultd(k));
  if (mcon == m) resmax = resold + ratio * (resmax - resold);

  if (icon > 0) goto L70;
  if (step == stpful) return;
L480:
  mcon = m + 1;
  icon = mcon;
  iact(mcon) = mcon;
  vmultc(mcon) = 0.0;
  goto L60;

L490:
  if (mcon == m) goto L480;
  ifull = 0;
}

}  // namespace

CobylaResult cobyla_minimize(const CobylaProblem& problem, std::vector<double> x0,
                             const CobylaOptions& options) {
  const int n = static_cast<int>(x0.size());
  const int m = problem.constraint_count;
  require(n >= 1, ErrorKind::kConfiguration, "COBYLA needs at least one variable");
  require(m >= 0, ErrorKind::kConfiguration, "negative constraint count");
  require(m == 0 || static_cast<bool>(problem.constraints), ErrorKind::kConfiguration,
          "constraint callback missing");
  require(static_cast<bool>(problem.objective), ErrorKind::kConfiguration, "objective missing");
  require(options.rhobeg > 0.0 && options.rhoend > 0.0 && options.rhoend <= options.rhobeg,
          ErrorKind::kConfiguration, "COBYLA needs 0 < rhoend <= rhobeg");
  require(options.max_evaluations >= 1, ErrorKind::kConfiguration,
          "evaluation budget must be at least 1");

  const int np = n + 1;
  const int mp = m + 1;
  const int mpp = m + 2;
  const double alpha = 0.25;
  const double beta = 2.1;
  const double gamma = 0.5;
  const double delta = 1.1;

  Vec1 x(n);
  for (int i = 1; i <= n; ++i) x(i) = x0[static_cast<std::size_t>(i - 1)];
  Vec1 con(mpp);
  Mat1 sim(n, np);
  Mat1 simi(n, n);
  Mat1 datmat(mpp, np);
  Mat1 a(n, mp);
  Vec1 vsig(n), veta(n), sigbar(n), dx(n), w(n);
  TrstlpWork work(n, m);
  std::vector<double> xbuf(static_cast<std::size_t>(n));
  std::vector<double> cbuf(static_cast<std::size_t>(m));

  CobylaResult result;
  result.status = CobylaStatus::kConverged;

  double rho = options.rhobeg;
  double parmu = 0.0;
  int nfvals = 0;
  int jdrop = np;
  int ibrnch = 0;
  int iflag = 0;
  int ifull = 0;
  int nbest, l;
  double f = 0.0, resmax = 0.0, phimin, temp, tempa, error, parsig = 0.0, pareta = 0.0, wsig,
         weta, cvmaxp, cvmaxm, sum = 0.0, dxsign, resnew, barmu, phi, prerec = 0.0, prerem = 0.0,
         vmold, vmnew, trured, ratio, edgmax, denom, cmin, cmax;

  temp = 1.0 / rho;
  for (int i = 1; i <= n; ++i) {
    sim(i, np) = x(i);
    for (int j = 1; j <= n; ++j) simi(i, j) = 0.0;
    sim(i, i) = rho;
    simi(i, i) = temp;
  }

L40:
  if (nfvals >= options.max_evaluations && nfvals > 0) {
    result.status = CobylaStatus::kMaxEvaluations;
    goto L600;
  }
  ++nfvals;
  for (int i = 1; i <= n; ++i) xbuf[static_cast<std::size_t>(i - 1)] = x(i);
  f = problem.objective(xbuf);
  if (std::isnan(f)) f = std::numeric_limits<double>::max();
  resmax = 0.0;
  if (m > 0) {
    problem.constraints(xbuf, cbuf);
    for (int k = 1; k <= m; ++k) {
      con(k) = cbuf[static_cast<std::size_t>(k - 1)];
      resmax = std::max(resmax, -con(k));
    }
  }
  con(mp) = f;
  con(mpp) = resmax;
  if (ibrnch == 1) goto L440;

  // Store the new values in column jdrop and, while the initial simplex is
  // being built, swap the new vertex into pole position if it is better.
  for (int k = 1; k <= mpp; ++k) datmat(k, jdrop) = con(k);
  if (nfvals > np) goto L130;
  if (jdrop <= n) {
    if (datmat(mp, np) <= f) {
      x(jdrop) = sim(jdrop, np);
    } else {
      sim(jdrop, np) = x(jdrop);
      for (int k = 1; k <= mpp; ++k) {
        datmat(k, jdrop) = datmat(k, np);
        datmat(k, np) = con(k);
      }
      for (int k = 1; k <= jdrop; ++k) {
        sim(jdrop, k) = -rho;
        temp = 0.0;
        for (int i = k; i <= jdrop; ++i) temp -= simi(i, k);
        simi(jdrop, k) = temp;
      }
    }
  }
  if (nfvals <= n) {
    jdrop = nfvals;
    x(jdrop) += rho;
    goto L40;
  }
L130:
  ibrnch = 1;

  // Move the vertex with the least merit value into pole position.
L140:
  phimin = datmat(mp, np) + parmu * datmat(mpp, np);
  nbest = np;
  for (int j = 1; j <= n; ++j) {
    temp = datmat(mp, j) + parmu * datmat(mpp, j);
    if (temp < phimin) {
      nbest = j;
      phimin = temp;
    } else if (temp == phimin && parmu == 0.0) {
      if (datmat(mpp, j) < datmat(mpp, nbest)) nbest = j;
    }
  }
  if (nbest <= n) {
    for (int i = 1; i <= mpp; ++i) {
      temp = datmat(i, np);
      datmat(i, np) = datmat(i, nbest);
      datmat(i, nbest) = temp;
    }
    for (int i = 1; i <= n; ++i) {
      temp = sim(i, nbest);
      sim(i, nbest) = 0.0;
      sim(i, np) += temp;
      tempa = 0.0;
      for (int k = 1; k <= n; ++k) {
        sim(i, k) -= temp;
        tempa -= simi(k, i);
      }
      simi(nbest, i) = tempa;
    }
  }

  error = 0.0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      temp = (i == j) ? -1.0 : 0.0;
      for (int k = 1; k <= n; ++k) temp += simi(i, k) * sim(k, j);
      error = std::max(error, std::abs(temp));
    }
  }
  if (error > 0.1) {
    result.status = CobylaStatus::kRoundingErrors;
    goto L600;
  }

  // Linear models: constraint gradients in a(:,1..m), minus the objective
  // gradient in a(:,m+1).
  for (int k = 1; k <= mp; ++k) {
    con(k) = -datmat(k, np);
    for (int j = 1; j <= n; ++j) w(j) = datmat(k, j) + con(k);
    for (int i = 1; i <= n; ++i) {
      temp = 0.0;
      for (int j = 1; j <= n; ++j) temp += w(j) * simi(j, i);
      if (k == mp) temp = -temp;
      a(i, k) = temp;
    }
  }

  // Simplex acceptability.
  iflag = 1;
  parsig = alpha * rho;
  pareta = beta * rho;
  for (int j = 1; j <= n; ++j) {
    wsig = 0.0;
    weta = 0.0;
    for (int i = 1; i <= n; ++i) {
      wsig += simi(j, i) * simi(j, i);
      weta += sim(i, j) * sim(i, j);
    }
    vsig(j) = 1.0 / std::sqrt(wsig);
    veta(j) = std::sqrt(weta);
    if (vsig(j) < parsig || veta(j) > pareta) iflag = 0;
  }

  if (ibrnch == 1 || iflag == 1) goto L370;

  // Geometry step: replace the worst-shaped vertex.
  jdrop = 0;
  temp = pareta;
  for (int j = 1; j <= n; ++j) {
    if (veta(j) > temp) {
      jdrop = j;
      temp = veta(j);
    }
  }
  if (jdrop == 0) {
    for (int j = 1; j <= n; ++j) {
      if (vsig(j) < temp) {
        jdrop = j;
        temp = vsig(j);
      }
    }
  }

  temp = gamma * rho * vsig(jdrop);
  for (int i = 1; i <= n; ++i) dx(i) = temp * simi(jdrop, i);
  cvmaxp = 0.0;
  cvmaxm = 0.0;
  for (int k = 1; k <= mp; ++k) {
    sum = 0.0;
    for (int i = 1; i <= n; ++i) sum += a(i, k) * dx(i);
    if (k < mp) {
      temp = datmat(k, np);
      cvmaxp = std::max(cvmaxp, -sum - temp);
      cvmaxm = std::max(cvmaxm, sum - temp);
    }
  }
  dxsign = 1.0;
  if (parmu * (cvmaxp - cvmaxm) > sum + sum) dxsign = -1.0;

  temp = 0.0;
  for (int i = 1; i <= n; ++i) {
    dx(i) *= dxsign;
    sim(i, jdrop) = dx(i);
    temp += simi(jdrop, i) * dx(i);
  }
  for (int i = 1; i <= n; ++i) simi(jdrop, i) /= temp;
  for (int j = 1; j <= n; ++j) {
    if (j != jdrop) {
      temp = 0.0;
      for (int i = 1; i <= n; ++i) temp += simi(j, i) * dx(i);
      for (int i = 1; i <= n; ++i) simi(j, i) -= temp * simi(jdrop, i);
    }
    x(j) = sim(j, np) + dx(j);
  }
  goto L40;

  // Trust-region step.
L370:
  ifull = 0;
  trstlp(n, m, a, con, rho, dx, ifull, work);
  if (ifull == 0) {
    temp = 0.0;
    for (int i = 1; i <= n; ++i) temp += dx(i) * dx(i);
    if (temp < 0.25 * rho * rho) {
      ibrnch = 1;
      goto L550;
    }
  }

  resnew = 0.0;
  con(mp) = 0.0;
  for (int k = 1; k <= mp; ++k) {
    sum = con(k);
    for (int i = 1; i <= n; ++i) sum -= a(i, k) * dx(i);
    if (k < mp) resnew = std::max(resnew, sum);
  }

  // Increase the penalty parameter if needed; a change of pole restarts.
  barmu = 0.0;
  prerec = datmat(mpp, np) - resnew;
  if (prerec > 0.0) barmu = sum / prerec;
  if (parmu < 1.5 * barmu) {
    parmu = 2.0 * barmu;
    phi = datmat(mp, np) + parmu * datmat(mpp, np);
    for (int j = 1; j <= n; ++j) {
      temp = datmat(mp, j) + parmu * datmat(mpp, j);
      if (temp < phi) goto L140;
      if (temp == phi && parmu == 0.0) {
        if (datmat(mpp, j) < datmat(mpp, np)) goto L140;
      }
    }
  }
  prerem = parmu * prerec - sum;

  for (int i = 1; i <= n; ++i) x(i) = sim(i, np) + dx(i);
  ibrnch = 1;
  goto L40;

L440:
  vmold = datmat(mp, np) + parmu * datmat(mpp, np);
  vmnew = f + parmu * resmax;
  trured = vmold - vmnew;
  if (parmu == 0.0 && f == datmat(mp, np)) {
    prerem = prerec;
    trured = datmat(mpp, np) - resmax;
  }

  // Choose the vertex that the trial point replaces (mandatory if trured > 0).
  ratio = (trured <= 0.0) ? 1.0 : 0.0;
  jdrop = 0;
  for (int j = 1; j <= n; ++j) {
    temp = 0.0;
    for (int i = 1; i <= n; ++i) temp += simi(j, i) * dx(i);
    temp = std::abs(temp);
    if (temp > ratio) {
      jdrop = j;
      ratio = temp;
    }
    sigbar(j) = temp * vsig(j);
  }

  edgmax = delta * rho;
  l = 0;
  for (int j = 1; j <= n; ++j) {
    if (sigbar(j) >= parsig || sigbar(j) >= vsig(j)) {
      temp = veta(j);
      if (trured > 0.0) {
        temp = 0.0;
        for (int i = 1; i <= n; ++i) temp += (dx(i) - sim(i, j)) * (dx(i) - sim(i, j));
        temp = std::sqrt(temp);
      }
      if (temp > edgmax) {
        l = j;
        edgmax = temp;
      }
    }
  }
  if (l > 0) jdrop = l;
  if (jdrop == 0) goto L550;

  temp = 0.0;
  for (int i = 1; i <= n; ++i) {
    sim(i, jdrop) = dx(i);
    temp += simi(jdrop, i) * dx(i);
  }
  for (int i = 1; i <= n; ++i) simi(jdrop, i) /= temp;
  for (int j = 1; j <= n; ++j) {
    if (j != jdrop) {
      temp = 0.0;
      for (int i = 1; i <= n; ++i) temp += simi(j, i) * dx(i);
      for (int i = 1; i <= n; ++i) simi(j, i) -= temp * simi(jdrop, i);
    }
  }
  for (int k = 1; k <= mpp; ++k) datmat(k, jdrop) = con(k);

  if (trured > 0.0 && trured >= 0.1 * prerem) goto L140;
L550:
  if (iflag == 0) {
    ibrnch = 0;
    goto L140;
  }

  // Shrink the trust region and relax the penalty parameter.
  if (rho > options.rhoend) {
    rho *= 0.5;
    if (rho <= 1.5 * options.rhoend) rho = options.rhoend;
    if (parmu > 0.0) {
      denom = 0.0;
      for (int k = 1; k <= mp; ++k) {
        cmin = datmat(k, np);
        cmax = cmin;
        for (int i = 1; i <= n; ++i) {
          cmin = std::min(cmin, datmat(k, i));
          cmax = std::max(cmax, datmat(k, i));
        }
        if (k <= m && cmin < 0.5 * cmax) {
          temp = std::max(cmax, 0.0) - cmin;
          denom = (denom <= 0.0) ? temp : std::min(denom, temp);
        }
      }
      if (denom == 0.0) {
        parmu = 0.0;
      } else if (cmax - cmin < parmu * denom) {
        parmu = (cmax - cmin) / denom;
      }
    }
    goto L140;
  }

L600:
  // The pole vertex holds the best merit value found.
  result.x.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) result.x[static_cast<std::size_t>(i - 1)] = sim(i, np);
  result.f = datmat(mp, np);
  result.max_violation = datmat(mpp, np);
  result.evaluations = nfvals;
  return result;
}

}  // namespace aql
