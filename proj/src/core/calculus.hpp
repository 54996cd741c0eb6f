#pragma once

#include "foliation.hpp"

namespace folham {

// Exterior derivative: round trip through the coordinate coframe.
BigradedForm exterior_d(const BigradedForm& w);
CoordForm exterior_d(const CoordForm& w);

// d = d' + d'' + del with bidegrees (1,0), (0,1), (2,-1).
struct DComponents {
    BigradedForm d_prime;
    BigradedForm d_second;
    BigradedForm del;
};

DComponents d_components(const BigradedForm& w);
BigradedForm d_prime(const BigradedForm& w);
BigradedForm d_second(const BigradedForm& w);
BigradedForm d_del(const BigradedForm& w);

// L_X w = d i(X) w + i(X) d w.
BigradedForm lie(const VectorField& x, const BigradedForm& w);

struct LieSplit {
    BigradedForm prime;   // i(X)d' + d'i(X)
    BigradedForm second;  // i(X)d'' + d''i(X)
};

// Requires X in Gamma E.
LieSplit lie_split(const VectorField& x, const BigradedForm& w);
BigradedForm lie_prime(const VectorField& x, const BigradedForm& w);

VectorField vf_bracket(const VectorField& x, const VectorField& y);

// N_E(X,Y) = [p_E X, p_E Y] - p_E[p_E X, Y] - p_E[X, p_E Y] + p_E[X,Y].
VectorField nijenhuis_E(const VectorField& x, const VectorField& y);

// tau^u_{ce} of the chart, with [X_c, X_e] = tau^u_{ce} d/dy^u.
Poly tau(const Chart& chart, std::size_t u, std::size_t c, std::size_t e);

// Schouten-Nijenhuis bracket. Normalized so that for a bivector W with
// {f,g} = W(df,dg):  [W,W](df,dg,dk) = 2 * sum_cycl {{f,g},k}, and so that
// [X, .] is the Lie derivative for a vector field X. This is (-1)^(p-1) times
// the superalgebra bracket, so [Q,P] = (-1)^(pq) [P,Q].
Multivector schouten(const Multivector& a, const Multivector& b);
CoordMultivector schouten(const CoordMultivector& a, const CoordMultivector& b);

}  // namespace folham
