#include <cmath>

#include "internal.hpp"

namespace numrad {

LiteratureInputs literatureInputs(const CMatrix& t) {
  if (!t.isSquare()) throw Error(ErrorCode::NotSquare, "square matrix expected");
  const CMatrix h = hermPencil(t, 0.0);
  const CMatrix k = hermPencil(t, 0.25 * kTwoPi);
  LiteratureInputs in;
  in.normT = opNorm(t);
  in.normH = opNorm(h);
  in.normK = opNorm(k);
  const CMatrix ts = adjoint(t);
  in.normGramSum = opNorm(hermitianPart(ts * t + t * ts));
  in.crawfordH = crawford(h);
  in.crawfordK = crawford(k);
  in.crawfordT2 = crawford(t * t);
  return in;
}

std::vector<NamedValue> litBounds(const LiteratureInputs& in) {
  const double half = 0.5 * in.normT;
  return {
      {"kmy", std::sqrt(0.5 * (in.normH * in.normH + in.normK * in.normK))},
      {"aok", 0.5 * std::sqrt(in.normGramSum + 2.0 * in.crawfordT2)},
      {"bbp1", std::sqrt(in.normH * in.normH + in.crawfordK * in.crawfordK)},
      {"bbp2", std::sqrt(in.normK * in.normK + in.crawfordH * in.crawfordH)},
      {"hks1", half + 0.5 * std::abs(in.normH - in.normK)},
      {"hks2", half + 0.25 * std::abs(in.normH - half) + 0.25 * std::abs(in.normK - half)},
  };
}

std::vector<NamedValue> litBounds(const CMatrix& t) { return litBounds(literatureInputs(t)); }

double upperKittaneh(const CMatrix& t) {
  if (!t.isSquare()) throw Error(ErrorCode::NotSquare, "square matrix expected");
  const CMatrix ts = adjoint(t);
  return std::sqrt(0.5 * opNorm(hermitianPart(t * ts + ts * t)));
}

}  // namespace numrad
