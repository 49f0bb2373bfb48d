#pragma once

#include "rigiscope/polarity.hpp"

namespace rigiscope {

/// JSON report {rank, motion_dim, trivial_dim, internal_dim, stress_dim,
/// verdict, singular_values, isostatic, degenerate_edges}.
std::string verdict_report_json(const VerdictRecord& rec);

/// Stiffness verdict with the polar point framework's analysis attached.
std::string stiffness_report_json(const StiffnessRecord& rec);

/// Column-labeled matrix exports.
std::string matrix_report_json(const RigidityMatrix& m);
std::string matrix_csv(const RigidityMatrix& m);

/// Kernel-basis exports (motions carry the trivial/internal split); stress
/// rows are annotated with member kinds when the framework declares any,
/// so cable/strut sign conditions can be read off the basis.
std::string motion_report_json(const RigidityMatrix& m, const MotionSpace& motions);
std::string stress_report_json(const RigidityMatrix& m, const StressSpace& stresses,
                               const std::vector<MemberKind>& member_kinds = {});

/// Residual report {max_residual, rank_E, rank_X, det_T, pass} per curvature.
std::string equivalence_report_json(const EquivalenceReport& report);

/// Shortest round-trip decimal representation.
std::string format_double(double value);

}  // namespace rigiscope
