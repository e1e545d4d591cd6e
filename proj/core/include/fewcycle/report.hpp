#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "fewcycle/bloch.hpp"
#include "fewcycle/sweep.hpp"

namespace fewcycle {

inline constexpr std::string_view kTrajectoryCsvHeader =
    "t_fs,rho11,rho22,rho33,re_rho21,im_rho21,re_rho31,im_rho31,re_rho32,im_rho32,omega31_t,"
    "omega32_t";

/// One row per stored step, shortest round-trip decimal text.
void emit_trajectory_csv(const Trajectory& traj, std::ostream& out);
void emit_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path);

/// 1-D: `axis_value,observable`. 2-D: `axis1,axis2,observable,converged`.
/// Rows are row-major over the grid.
void emit_sweep_csv(const SweepResult& result, std::ostream& out);
void emit_sweep_csv(const SweepResult& result, const std::filesystem::path& path);

/// rho22(end) of the same scenario integrated over twice the window.
struct WindowSensitivity {
  Window doubled;
  double final_rho22 = 0.0;
};

WindowSensitivity window_sensitivity(const Scenario& scenario);

std::string run_summary(std::string_view name, const Scenario& scenario, const Trajectory& traj,
                        const std::optional<WindowSensitivity>& sensitivity = std::nullopt);

std::string sweep_summary(std::string_view name, const SweepResult& result);

}  // namespace fewcycle
