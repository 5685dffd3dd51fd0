#pragma once

// Textual tokens accepted on the command line.
//
// Numbers:    0.3, -2.5e-3, 0.3+0.1i, -i, 2i, sqrt0.2, -sqrt0.8, cis:pi/3,
//             cis:-0.25*pi, cis:1.2 (angle in radians)
// Self-maps:  '*'-separated factors: a number, l or l^m, b(a) for the
//             Blaschke factor (l−a)/(1−āl). Example: 0.5*l^2*b(0.3i)
// Maps:       family[:arg,arg,...] with positional or key=value args; see
//             parse_left_inverse.
// Geodesics:  kind[:key=value,...]; see parse_geodesic.

#include <string>
#include <vector>

#include "extremal_disc/classify.hpp"

namespace xdisc::cli {

Complex parse_complex(const std::string& token);
double parse_real(const std::string& token);
int parse_int(const std::string& token);
SelfMapSpec parse_selfmap(const std::string& token);

/// Splits on `sep`, ignoring separators inside parentheses.
std::vector<std::string> split_args(const std::string& text, char sep = ',');

/// psi:w | phi:w[,swapped] | phitilde:w[,swapped] | ball:g | gaj:A,j |
/// reinhardt:beta,k | retract:t[,h] | bidisc-linear:t,gamma | fh:beta[,swapped]
/// | g2-parabolic:tau=..,alpha=.. | projection:i | constant:c
/// Any map also accepts post-tau= and post-alpha= for the post-composition.
LeftInverseSpec parse_left_inverse(const std::string& token);

/// royal | blaschke:alpha | auto:tau=..,alpha=.. | graph:g=EXPR[;EXPR...] |
/// axis[:dim] | form0:omega1=..,omega2=..,C=..,psihat=EXPR |
/// formva:beta=..,a=..,b=..,c=..,d=..,z=identity|zero|strict|EXPR
/// (EXPR for z is W in Z = l·W).
GeodesicSpec parse_geodesic(const std::string& token);

/// identity, zero (Z ≡ 0), strict (Z = 0.5l²) or a self-map W with Z = l·W.
ZSpec parse_z(const std::string& token);

}  // namespace xdisc::cli
