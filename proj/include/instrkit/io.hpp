#pragma once

#include <string>
#include <vector>

namespace instrkit {

// Reads a whole file; throws Error when the file cannot be opened.
std::string read_text_file(const std::string& path);

// Writes text, creating parent directories as needed; throws Error on failure.
void write_text_file(const std::string& path, const std::string& text);

// Splits on '\n', tolerating a trailing newline and CRLF endings.
std::vector<std::string> split_lines(const std::string& text);

std::vector<std::string> read_lines(const std::string& path);

}  // namespace instrkit
