#pragma once

// Umbrella header for the khv library: Khovanov homology ranks of link
// diagrams from PD codes, the Khovanov polynomial Kh(t,q), Jones
// specializations with a Kauffman-bracket cross-check, and the exact
// y-expansion coefficients v_n(t,x) of Kh(t, x e^y).

#include "khv/corpus.hpp"
#include "khv/diagram.hpp"
#include "khv/errors.hpp"
#include "khv/expansion.hpp"
#include "khv/homology.hpp"
#include "khv/laurent.hpp"
#include "khv/linalg.hpp"
#include "khv/numeric.hpp"
#include "khv/polynomials.hpp"
#include "khv/serialize.hpp"
#include "khv/state_cube.hpp"
