#pragma once
#include "wgs/grid.hpp"

namespace wgs {

// Frequency at which the lowest transverse band of the linearization at the
// line soliton touches zero: 4/((p-1)(p+3)).
double omega_p(double p);

// R_omega(x) = ((p+1)omega/2)^{1/(p-1)} sech^{2/(p-1)}((p-1)sqrt(omega)x/2),
// the positive even solution of -R'' + omega R = R^p.
double soliton_value(double p, double omega, double x);
double soliton_derivative_value(double p, double omega, double x);

Field1D line_soliton(double p, double omega, const Grid1D& g);
Field1D soliton_x_derivative(double p, double omega, const Grid1D& g);
// R_omega^{(p+1)/2}: eigenfunction of the shifted plus-operator at its lowest
// eigenvalue -omega/omega_p
Field1D soliton_power_eigenfunction(double p, double omega, const Grid1D& g);

// minimal 1-D action ((p-1)/(2(p+1))) ||R_omega||_{p+1}^{p+1} by quadrature;
// cross-checked against the exact omega-scaling of a rescaled-grid evaluation
double m_line(double p, double omega, const Grid1D& g);

// embed a 1-D profile as a y-independent complex field
Field2D lift_to_2d(const Field1D& f, const GridSpec& g);

}  // namespace wgs
