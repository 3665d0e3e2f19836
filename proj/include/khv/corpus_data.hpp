#pragma once

namespace khv {

// Built-in corpus.  The PD codes are standard diagrams for the knots named,
// mirrored where needed so the computed homology carries the gradings of the
// reference table; the kh/v rows are transcribed from that table by hand and
// are never regenerated by the code they test.
inline constexpr const char* kEmbeddedCorpus = R"CORPUS(# khv corpus
version 1

[unknot]
pd = U
kh = q^-1 + q

[unknot_kink_pos]
pd = X(1,1,2,2)
kh = q^-1 + q

[unknot_kink_neg]
pd = X(1,2,2,1)
kh = q^-1 + q

[unlink2]
pd = U U
kh = q^-2 + 2 + q^2

[hopf_pos]
pd = X(1,3,2,4) X(3,1,4,2)
kh = 1 + q^2 + q^4*t^2 + q^6*t^2

[3_1_kinked]
pd = X(6,2,7,1) X(8,6,1,5) X(4,8,5,7) X(2,4,3,3)

[3_1]
pd = X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)
kh = q^9*t^3 + q^5*t^2 + q^3 + q
v0 = t^3*x^9 + t^2*x^5 + x^3 + x
v1 = 9*t^3*x^9 + 5*t^2*x^5 + 3*x^3 + x
v2 = 81/2*t^3*x^9 + 25/2*t^2*x^5 + 9/2*x^3 + 1/2*x
v3 = 243/2*t^3*x^9 + 125/6*t^2*x^5 + 9/2*x^3 + 1/6*x
v4 = 2187/8*t^3*x^9 + 625/24*t^2*x^5 + 27/8*x^3 + 1/24*x
v5 = 19683/40*t^3*x^9 + 625/24*t^2*x^5 + 81/40*x^3 + 1/120*x

[4_1]
pd = X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)
kh = q^5*t^2 + q^-5*t^-2 + q*t + q^-1*t^-1 + q + q^-1
v0 = t^2*x^5 + t^-2*x^-5 + t*x + t^-1*x^-1 + x + x^-1
v1 = 5*t^2*x^5 - 5*t^-2*x^-5 + t*x - t^-1*x^-1 + x - x^-1
v2 = 25/2*t^2*x^5 + 25/2*t^-2*x^-5 + 1/2*t*x + 1/2*t^-1*x^-1 + 1/2*x + 1/2*x^-1
v3 = 125/6*t^2*x^5 - 125/6*t^-2*x^-5 + 1/6*t*x - 1/6*t^-1*x^-1 + 1/6*x - 1/6*x^-1
v4 = 625/24*t^2*x^5 + 625/24*t^-2*x^-5 + 1/24*t*x + 1/24*t^-1*x^-1 + 1/24*x + 1/24*x^-1
v5 = 625/24*t^2*x^5 - 625/24*t^-2*x^-5 + 1/120*t*x - 1/120*t^-1*x^-1 + 1/120*x - 1/120*x^-1

[5_1]
pd = X(6,2,7,1) X(8,4,9,3) X(10,6,1,5) X(2,8,3,7) X(4,10,5,9)
kh = q^15*t^5 + q^11*t^4 + q^11*t^3 + q^7*t^2 + q^5 + q^3
v0 = t^5*x^15 + t^4*x^11 + t^3*x^11 + t^2*x^7 + x^5 + x^3
v1 = 15*t^5*x^15 + 11*t^4*x^11 + 11*t^3*x^11 + 7*t^2*x^7 + 5*x^5 + 3*x^3
v2 = 225/2*t^5*x^15 + 121/2*t^4*x^11 + 121/2*t^3*x^11 + 49/2*t^2*x^7 + 25/2*x^5 + 9/2*x^3
v3 = 1125/2*t^5*x^15 + 1331/6*t^4*x^11 + 1331/6*t^3*x^11 + 343/6*t^2*x^7 + 125/6*x^5 + 9/2*x^3
v4 = 16875/8*t^5*x^15 + 14641/24*t^4*x^11 + 14641/24*t^3*x^11 + 2401/24*t^2*x^7 + 625/24*x^5 + 27/8*x^3
v5 = 50625/8*t^5*x^15 + 161051/120*t^4*x^11 + 161051/120*t^3*x^11 + 16807/120*t^2*x^7 + 625/24*x^5 + 81/40*x^3

[5_2]
pd = X(4,2,5,1) X(8,4,9,3) X(10,6,1,5) X(6,10,7,9) X(2,8,3,7)
kh = q^13*t^5 + q^9*t^4 + q^9*t^3 + q^7*t^2 + q^5*t^2 + q^3*t + q^3 + q
v0 = t^5*x^13 + t^4*x^9 + t^3*x^9 + t^2*x^7 + t^2*x^5 + t*x^3 + x^3 + x
v1 = 13*t^5*x^13 + 9*t^4*x^9 + 9*t^3*x^9 + 7*t^2*x^7 + 5*t^2*x^5 + 3*t*x^3 + 3*x^3 + x
v2 = 169/2*t^5*x^13 + 81/2*t^4*x^9 + 81/2*t^3*x^9 + 49/2*t^2*x^7 + 25/2*t^2*x^5 + 9/2*t*x^3 + 9/2*x^3 + 1/2*x
v3 = 2197/6*t^5*x^13 + 243/2*t^4*x^9 + 243/2*t^3*x^9 + 343/6*t^2*x^7 + 125/6*t^2*x^5 + 9/2*t*x^3 + 9/2*x^3 + 1/6*x
v4 = 28561/24*t^5*x^13 + 2187/8*t^4*x^9 + 2187/8*t^3*x^9 + 2401/24*t^2*x^7 + 625/24*t^2*x^5 + 27/8*t*x^3 + 27/8*x^3 + 1/24*x
v5 = 371293/120*t^5*x^13 + 19683/40*t^4*x^9 + 19683/40*t^3*x^9 + 16807/120*t^2*x^7 + 625/24*t^2*x^5 + 81/40*t*x^3 + 81/40*x^3 + 1/120*x

[6_1]
pd = X(4,2,5,1) X(10,8,11,7) X(8,3,9,4) X(2,9,3,10) X(12,6,1,5) X(6,12,7,11)
kh = q^9*t^4 + q^5*t^3 + q^5*t^2 + q^-5*t^-2 + q^3*t + q*t + q^-1*t^-1 + q + 2*q^-1
v0 = t^4*x^9 + t^3*x^5 + t^2*x^5 + t^-2*x^-5 + t*x^3 + t*x + t^-1*x^-1 + x + 2*x^-1
v1 = 9*t^4*x^9 + 5*t^3*x^5 + 5*t^2*x^5 - 5*t^-2*x^-5 + 3*t*x^3 + t*x - t^-1*x^-1 + x - 2*x^-1
v2 = 81/2*t^4*x^9 + 25/2*t^3*x^5 + 25/2*t^2*x^5 + 25/2*t^-2*x^-5 + 9/2*t*x^3 + 1/2*t*x + 1/2*t^-1*x^-1 + 1/2*x + x^-1
v3 = 243/2*t^4*x^9 + 125/6*t^3*x^5 + 125/6*t^2*x^5 - 125/6*t^-2*x^-5 + 9/2*t*x^3 + 1/6*t*x - 1/6*t^-1*x^-1 + 1/6*x - 1/3*x^-1
v4 = 2187/8*t^4*x^9 + 625/24*t^3*x^5 + 625/24*t^2*x^5 + 625/24*t^-2*x^-5 + 27/8*t*x^3 + 1/24*t*x + 1/24*t^-1*x^-1 + 1/24*x + 1/12*x^-1
v5 = 19683/40*t^4*x^9 + 625/24*t^3*x^5 + 625/24*t^2*x^5 - 625/24*t^-2*x^-5 + 81/40*t*x^3 + 1/120*t*x - 1/120*t^-1*x^-1 + 1/120*x - 1/60*x^-1

[6_2]
pd = X(4,2,5,1) X(10,6,11,5) X(8,3,9,4) X(2,9,3,10) X(12,8,1,7) X(6,12,7,11)
kh = q^11*t^4 + q^9*t^3 + q^7*t^3 + q^7*t^2 + q^5*t^2 + q^5*t + q^-3*t^-2 + q^3*t + q^3 + q*t^-1 + 2*q
v0 = t^4*x^11 + t^3*x^9 + t^3*x^7 + t^2*x^7 + t^2*x^5 + t^-2*x^-3 + t*x^5 + t*x^3 + t^-1*x + x^3 + 2*x
v1 = 11*t^4*x^11 + 9*t^3*x^9 + 7*t^3*x^7 + 7*t^2*x^7 + 5*t^2*x^5 - 3*t^-2*x^-3 + 5*t*x^5 + 3*t*x^3 + t^-1*x + 3*x^3 + 2*x
v2 = 121/2*t^4*x^11 + 81/2*t^3*x^9 + 49/2*t^3*x^7 + 49/2*t^2*x^7 + 25/2*t^2*x^5 + 9/2*t^-2*x^-3 + 25/2*t*x^5 + 9/2*t*x^3 + 1/2*t^-1*x + 9/2*x^3 + x
v3 = 1331/6*t^4*x^11 + 243/2*t^3*x^9 + 343/6*t^3*x^7 + 343/6*t^2*x^7 + 125/6*t^2*x^5 - 9/2*t^-2*x^-3 + 125/6*t*x^5 + 9/2*t*x^3 + 1/6*t^-1*x + 9/2*x^3 + 1/3*x
v4 = 14641/24*t^4*x^11 + 2187/8*t^3*x^9 + 2401/24*t^3*x^7 + 2401/24*t^2*x^7 + 625/24*t^2*x^5 + 27/8*t^-2*x^-3 + 625/24*t*x^5 + 27/8*t*x^3 + 1/24*t^-1*x + 27/8*x^3 + 1/12*x
v5 = 161051/120*t^4*x^11 + 19683/40*t^3*x^9 + 16807/120*t^3*x^7 + 16807/120*t^2*x^7 + 625/24*t^2*x^5 - 81/40*t^-2*x^-3 + 625/24*t*x^5 + 81/40*t*x^3 + 1/120*t^-1*x + 81/40*x^3 + 1/60*x

[6_3]
pd = X(4,2,5,1) X(8,4,9,3) X(12,9,1,10) X(10,5,11,6) X(6,11,7,12) X(2,8,3,7)
kh = q^7*t^3 + q^-7*t^-3 + q^5*t^2 + q^-5*t^-2 + q^3*t^2 + q^-3*t^-2 + q^3*t + q^-3*t^-1 + q*t + q^-1*t^-1 + 2*q + 2*q^-1
v0 = t^3*x^7 + t^-3*x^-7 + t^2*x^5 + t^-2*x^-5 + t^2*x^3 + t^-2*x^-3 + t*x^3 + t^-1*x^-3 + t*x + t^-1*x^-1 + 2*x + 2*x^-1
v1 = 7*t^3*x^7 - 7*t^-3*x^-7 + 5*t^2*x^5 - 5*t^-2*x^-5 + 3*t^2*x^3 - 3*t^-2*x^-3 + 3*t*x^3 - 3*t^-1*x^-3 + t*x - t^-1*x^-1 + 2*x - 2*x^-1
v2 = 49/2*t^3*x^7 + 49/2*t^-3*x^-7 + 25/2*t^2*x^5 + 25/2*t^-2*x^-5 + 9/2*t^2*x^3 + 9/2*t^-2*x^-3 + 9/2*t*x^3 + 9/2*t^-1*x^-3 + 1/2*t*x + 1/2*t^-1*x^-1 + x + x^-1
v3 = 343/6*t^3*x^7 - 343/6*t^-3*x^-7 + 125/6*t^2*x^5 - 125/6*t^-2*x^-5 + 9/2*t^2*x^3 - 9/2*t^-2*x^-3 + 9/2*t*x^3 - 9/2*t^-1*x^-3 + 1/6*t*x - 1/6*t^-1*x^-1 + 1/3*x - 1/3*x^-1
v4 = 2401/24*t^3*x^7 + 2401/24*t^-3*x^-7 + 625/24*t^2*x^5 + 625/24*t^-2*x^-5 + 27/8*t^2*x^3 + 27/8*t^-2*x^-3 + 27/8*t*x^3 + 27/8*t^-1*x^-3 + 1/24*t*x + 1/24*t^-1*x^-1 + 1/12*x + 1/12*x^-1
v5 = 16807/120*t^3*x^7 - 16807/120*t^-3*x^-7 + 625/24*t^2*x^5 - 625/24*t^-2*x^-5 + 81/40*t^2*x^3 - 81/40*t^-2*x^-3 + 81/40*t*x^3 - 81/40*t^-1*x^-3 + 1/120*t*x - 1/120*t^-1*x^-1 + 1/60*x - 1/60*x^-1
)CORPUS";

}  // namespace khv
