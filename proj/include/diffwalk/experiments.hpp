#pragma once

#include <cstdint>
#include <filesystem>

#include "diffwalk/config.hpp"

namespace diffwalk {

// Config-driven experiment drivers. Each writes its artifacts plus a copy of
// the resolved config into out_dir and returns a process exit code: 0 on
// success, 3 when a verification threshold fails. Config errors throw
// ConfigError; numerical failures throw std::runtime_error.
int run_fig2(const Config& config, const std::filesystem::path& out_dir);
int run_fig3(const Config& config, const std::filesystem::path& out_dir);
int run_swissroll(const Config& config, const std::filesystem::path& out_dir);
int run_verify_paths(const Config& config, const std::filesystem::path& out_dir,
                     std::uint64_t seed);
int run_classify(const Config& config, const std::filesystem::path& out_dir);

}  // namespace diffwalk
