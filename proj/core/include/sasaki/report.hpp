#pragma once

// Machine-readable reports and the command layer behind the CLI.

#include "sasaki/check.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sasaki {

struct InputDigest {
    std::string path;
    std::string sha256;  // lowercase hex
};

struct Report {
    std::string command;
    std::vector<InputDigest> inputs;
    std::vector<Check> records;

    /// Pass iff no record fails; info records do not count against it.
    bool passed() const { return all_pass(records); }
    /// Records sorted by check_id (stable), serialized with two-space indentation.
    std::string to_json() const;
};

std::string sha256_hex(std::string_view bytes);

/// Prefixes every check id with `scope.`.
std::vector<Check> scoped(const std::string& scope, std::vector<Check> checks);

/// Runs tasks on at most `threads` workers; results keep task order.
std::vector<Check> run_tasks(const std::vector<std::function<std::vector<Check>()>>& tasks, unsigned threads);

struct CommandOptions {
    std::string command;
    std::string model, bundle, bundle1, bundle2, group, compare_model, out;
    bool basic = false, full = false;
    std::optional<std::size_t> rank;
    std::optional<std::pair<int, int>> degrees;
    unsigned threads = 1;
};

struct CommandResult {
    int exit_code = 0;   // 0 all pass, 1 some check failed, 2 input error
    std::string report;  // JSON, empty on input errors
    std::string error;   // diagnostic for exit code 2
};

/// Canonical command echo, e.g. "kahler-check --model h5.json --bundle b.json".
std::string echo(const CommandOptions& o);

CommandResult run_command(const CommandOptions& o);

}  // namespace sasaki
