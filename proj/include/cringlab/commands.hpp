#pragma once

#include <cstdint>

#include "cringlab/io.hpp"

namespace cringlab {

struct CommandOptions {
    std::size_t max_dim = 4;  // enumeration limit for connection
    std::optional<std::uint64_t> seed;
};

/// Command names understood by run_command.
const std::vector<std::string>& command_names();

/// Runs an analysis on objects of `doc`. Missing object arguments default to
/// the first object of the expected kind. Throws UnknownReference for missing
/// or mistyped objects and std::invalid_argument for bad arguments.
Report run_command(const std::string& command, const Document& doc, const std::vector<std::string>& args,
                   const CommandOptions& options = {});

}  // namespace cringlab
