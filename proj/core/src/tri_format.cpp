#include "tridisc/tri_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace tridisc {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

VertexId parse_id(std::string_view token, int line) {
  VertexId value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad vertex id '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::vector<Triangle> parse_tri(std::string_view text) {
  std::vector<Triangle> faces;
  bool header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "tri" || tokens[1] != "1") {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected header 'tri 1'");
      }
      header = true;
      continue;
    }
    if (tokens.size() != 4 || tokens[0] != "t") {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 't <a> <b> <c>'");
    }
    faces.push_back({parse_id(tokens[1], line_no), parse_id(tokens[2], line_no), parse_id(tokens[3], line_no)});
  }
  if (!header) throw Error(ErrorCode::ParseError, "missing header 'tri 1'");
  return faces;
}

CombinatorialDisc read_tri(std::string_view text) {
  const auto faces = parse_tri(text);
  return CombinatorialDisc::from_triangles(faces);
}

CombinatorialDisc read_tri_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_tri(buf.str());
}

std::string write_tri(const CombinatorialDisc& disc) {
  std::string out = "tri 1\n";
  for (const Triangle& t : disc.faces()) {
    out += "t " + std::to_string(t[0]) + ' ' + std::to_string(t[1]) + ' ' + std::to_string(t[2]) + '\n';
  }
  return out;
}

void write_tri_file(const CombinatorialDisc& disc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << write_tri(disc);
}

}  // namespace tridisc
