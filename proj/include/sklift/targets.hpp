#pragma once

namespace sklift::targets {

// Reference values for the two built-in verification examples.  Every
// decimal the pipeline is expected to reproduce lives here and nowhere else.

// Example 1: f of weight 18 and g of weight 12 at level 1
// (kappa, kappa', m, N) = (11, 9, 1, 1)
inline constexpr const char* ex1_norm_gg = "1.0353620568043209223478168122251645e-6";
inline constexpr const char* ex1_ratio_ff_hh = "75633.942121560198996880460854760845132468";
inline constexpr const char* ex1_lambda_sym2 = "0.0053135057875930754652200977341472154100";
inline constexpr const char* ex1_c_const = "1";
// signed pullback sum (3/2) c(3) + c(4); only its square enters the formula
inline constexpr const char* ex1_pullback = "-1/2";

// Example 2: f = g the weight-2 newform of level 15
// (kappa, kappa', m, N) = (1, 1, 0, 15)
inline constexpr const char* ex2_norm_gg = "0.0023596244145167680294160631624014882733";
inline constexpr const char* ex2_ratio_ff_hh = "1.0161993600970582320694739236097011625363";
inline constexpr const char* ex2_lambda_sym2 = "0.0034762890966413331251690052554140352448";
inline constexpr const char* ex2_c_const = "1";
inline constexpr const char* ex2_pullback = "2";

}  // namespace sklift::targets
