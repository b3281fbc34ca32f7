#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sast_triage::util {

std::string sha256_hex(std::string_view data);

bool is_valid_utf8(std::string_view bytes);

// Splits on '\n'; a single trailing newline produces no extra element, so
// joining with '\n' reconstructs the input modulo that trailing newline.
std::vector<std::string> split_lines(std::string_view text);

std::string to_lower(std::string_view s);

// Collapse runs of whitespace to single spaces and trim the ends.
std::string normalize_ws(std::string_view s);

std::string trim(std::string_view s);

bool iequals(std::string_view a, std::string_view b);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

std::string shell_quote(std::string_view arg);

struct CommandResult {
    int exit_status = -1;
    std::string output; // captured stdout
};

// Runs via /bin/sh -c and captures stdout. exit_status is the wait status
// decoded to the child's exit code, or -1 if the shell could not run.
CommandResult run_command(const std::string& command);

bool executable_exists(const std::string& name_or_path);

std::string iso8601_utc(std::chrono::system_clock::time_point tp);

// Round half-to-even at `digits` decimals and format with that many digits.
std::string format_rounded(double value, int digits);

} // namespace sast_triage::util
