#include "pqaka/persistence.hpp"

#include <fstream>

#include "pqaka/errors.hpp"

namespace pqaka::persistence {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::vector<std::string> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(std::move(line));
  }
  return out;
}

void write_lines_atomic(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    for (const auto& line : lines) out << line << '\n';
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace pqaka::persistence
