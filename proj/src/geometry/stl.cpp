// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/geometry/stl.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

#include "sarforge/core/error.hpp"

namespace sarforge::geometry {

namespace {

class LineTokens {
 public:
  explicit LineTokens(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens_.push_back(line.substr(start, i - start));
    }
  }
  std::size_t size() const { return tokens_.size(); }
  std::string_view operator[](std::size_t i) const { return tokens_[i]; }
  std::string rest(std::size_t from) const {
    std::string out;
    for (std::size_t i = from; i < tokens_.size(); ++i) {
      if (!out.empty()) out += ' ';
      out += tokens_[i];
    }
    return out;
  }

 private:
  std::vector<std::string_view> tokens_;
};

double parse_number(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("invalid number '" + std::string(tok) + "'", line);
  return v;
}

Vector3 parse_vec(const LineTokens& t, std::size_t from, std::size_t line) {
  if (t.size() != from + 3) throw ParseError("expected three coordinates", line);
  return {parse_number(t[from], line), parse_number(t[from + 1], line), parse_number(t[from + 2], line)};
}

void append_number(std::string& out, double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  out.append(buf, ptr);
}

}  // namespace

Mesh load_mesh(std::string_view text, std::string name, StlLoadReport* report) {
  enum class State { kTop, kSolid, kFacet, kLoop, kEndLoop, kEndFacet };
  State state = State::kTop;

  std::vector<Vector3> vertices;
  std::vector<Triangle> triangles;
  std::vector<Part> parts;
  std::map<std::tuple<double, double, double>, std::uint32_t> lookup;
  std::vector<Vector3> stored_normals;
  Vector3 stored_normal;
  Triangle current{};
  int corner = 0;
  std::size_t solids = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const LineTokens t(line);
    if (t.size() == 0) continue;
    const std::string_view kw = t[0];

    switch (state) {
      case State::kTop:
        if (kw != "solid") throw ParseError("expected 'solid'", line_no);
        parts.push_back({t.rest(1), triangles.size(), 0});
        lookup.clear();
        ++solids;
        state = State::kSolid;
        break;
      case State::kSolid:
        if (kw == "endsolid") {
          parts.back().facet_count = triangles.size() - parts.back().first_facet;
          state = State::kTop;
        } else if (kw == "facet") {
          if (t.size() < 2 || t[1] != "normal") throw ParseError("expected 'facet normal'", line_no);
          stored_normal = parse_vec(t, 2, line_no);
          state = State::kFacet;
        } else {
          throw ParseError("expected 'facet' or 'endsolid', got '" + std::string(kw) + "'", line_no);
        }
        break;
      case State::kFacet:
        if (kw != "outer" || t.size() != 2 || t[1] != "loop") throw ParseError("expected 'outer loop'", line_no);
        corner = 0;
        state = State::kLoop;
        break;
      case State::kLoop: {
        if (kw != "vertex") throw ParseError("expected 'vertex'", line_no);
        const Vector3 v = parse_vec(t, 1, line_no);
        const auto [it, inserted] =
            lookup.try_emplace({v.x, v.y, v.z}, static_cast<std::uint32_t>(vertices.size()));
        if (inserted) vertices.push_back(v);
        current[static_cast<std::size_t>(corner)] = it->second;
        if (++corner == 3) state = State::kEndLoop;
        break;
      }
      case State::kEndLoop:
        if (kw != "endloop") throw ParseError("expected 'endloop' after three vertices", line_no);
        state = State::kEndFacet;
        break;
      case State::kEndFacet:
        if (kw != "endfacet") throw ParseError("expected 'endfacet'", line_no);
        triangles.push_back(current);
        stored_normals.push_back(stored_normal);
        state = State::kSolid;
        break;
    }
  }
  if (state != State::kTop) throw ParseError("unexpected end of file (truncated STL)", line_no);
  if (solids == 0) throw ParseError("no 'solid' block found", line_no);

  if (parts.size() == 1 && parts[0].name.empty()) parts[0].name = name;
  Mesh mesh = Mesh::from_triangles(std::move(name), std::move(vertices), triangles, std::move(parts));
  if (report) {
    report->solids = solids;
    report->inconsistent_normals = 0;
    for (std::size_t f = 0; f < mesh.facet_count(); ++f) {
      const Vector3& s = stored_normals[f];
      const double len = norm(s);
      if (len == 0.0 || norm(s / len - mesh.facets()[f].normal) > 1e-6) ++report->inconsistent_normals;
    }
  }
  return mesh;
}

Mesh load_mesh_file(const std::filesystem::path& path, StlLoadReport* report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open mesh file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_mesh(ss.str(), path.stem().string(), report);
}

std::string save_mesh(const Mesh& mesh) {
  std::vector<Part> parts = mesh.parts();
  bool contiguous = !parts.empty();
  std::size_t next = 0;
  for (const Part& p : parts) {
    if (p.first_facet != next) contiguous = false;
    next = p.first_facet + p.facet_count;
  }
  if (next != mesh.facet_count()) contiguous = false;
  if (!contiguous) parts = {{mesh.name(), 0, mesh.facet_count()}};

  std::string out;
  out.reserve(mesh.facet_count() * 256);
  auto vec_line = [&out](const char* prefix, const Vector3& v) {
    out += prefix;
    append_number(out, v.x);
    out += ' ';
    append_number(out, v.y);
    out += ' ';
    append_number(out, v.z);
    out += '\n';
  };
  for (const Part& p : parts) {
    out += "solid " + p.name + "\n";
    for (std::size_t f = p.first_facet; f < p.first_facet + p.facet_count; ++f) {
      vec_line("  facet normal ", mesh.facets()[f].normal);
      out += "    outer loop\n";
      for (const Vector3& v : mesh.corners(f)) vec_line("      vertex ", v);
      out += "    endloop\n  endfacet\n";
    }
    out += "endsolid " + p.name + "\n";
  }
  return out;
}

void save_mesh_file(const Mesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write mesh file " + path.string());
  out << save_mesh(mesh);
}

}  // namespace sarforge::geometry
