#include "mgeo/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace mgeo {

std::string format_real(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string percent_escape(const std::string& s) {
    std::string out;
    for (unsigned char c : s) {
        if (c > ' ' && c != '%' && c != 0x7f) {
            out.push_back(char(c));
        } else {
            char buf[4];
            std::snprintf(buf, sizeof(buf), "%%%02X", c);
            out += buf;
        }
    }
    return out;
}

std::string percent_unescape(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '%' && i + 2 < s.size()) {
            unsigned value = 0;
            const auto res = std::from_chars(s.data() + i + 1, s.data() + i + 3, value, 16);
            if (res.ec != std::errc() || res.ptr != s.data() + i + 3)
                throw io_error("bad percent escape in '" + s + "'");
            out.push_back(char(value));
            i += 2;
        } else {
            out.push_back(s[i]);
        }
    }
    return out;
}

namespace {

std::string next_token(std::istream& in, const char* what) {
    std::string tok;
    if (!(in >> tok)) throw io_error(std::string("unexpected end of input, wanted ") + what);
    return tok;
}

double next_real(std::istream& in, const char* what) {
    const std::string tok = next_token(in, what);
    double value = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        throw io_error(std::string("bad real '") + tok + "' for " + what);
    return value;
}

std::size_t next_count(std::istream& in, const char* what) {
    const std::string tok = next_token(in, what);
    std::size_t value = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        throw io_error(std::string("bad count '") + tok + "' for " + what);
    return value;
}

void expect(std::istream& in, const char* keyword) {
    const std::string tok = next_token(in, keyword);
    if (tok != keyword)
        throw io_error(std::string("expected '") + keyword + "', found '" + tok + "'");
}

} // namespace

void write_metric_space(std::ostream& out, const FiniteMetricSpace& space) {
    out << "fms 1\n";
    out << "label " << (space.label().empty() ? "-" : percent_escape(space.label())) << "\n";
    out << "points " << space.size() << "\n";
    for (const auto& name : space.names()) out << percent_escape(name) << "\n";
    out << "dist\n";
    for (std::size_t i = 1; i < space.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            out << (j ? " " : "") << format_real(space(PointId(i), PointId(j)));
        out << "\n";
    }
}

FiniteMetricSpace read_metric_space(std::istream& in) {
    expect(in, "fms");
    if (next_count(in, "format version") != 1) throw io_error("unsupported fms version");
    expect(in, "label");
    const std::string raw_label = next_token(in, "label value");
    const std::string label = raw_label == "-" ? std::string() : percent_unescape(raw_label);
    expect(in, "points");
    const std::size_t n = next_count(in, "point count");
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(percent_unescape(next_token(in, "point name")));
    expect(in, "dist");
    std::vector<double> tri;
    tri.reserve(n * (n - 1) / 2);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) tri.push_back(next_real(in, "distance entry"));
    return FiniteMetricSpace::from_lower_triangle(std::move(names), tri, label);
}

void save_metric_space(const FiniteMetricSpace& space, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    write_metric_space(out, space);
    if (!out) throw io_error("write failed on '" + path + "'");
}

FiniteMetricSpace load_metric_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "'");
    return read_metric_space(in);
}

void write_mesh(std::ostream& out, const MeshManifold& mesh) {
    out << "mesh 1\n";
    out << "kind " << to_string(mesh.kind()) << "\n";
    out << "dim " << mesh.dim() << "\n";
    out << "vertices " << mesh.vertex_count() << "\n";
    for (const auto& v : mesh.vertices())
        out << format_real(v[0]) << " " << format_real(v[1]) << " " << format_real(v[2])
            << "\n";
    out << "edges " << mesh.edges().size() << "\n";
    for (const auto& e : mesh.edges())
        out << e.a << " " << e.b << " " << format_real(e.weight) << "\n";
}

MeshManifold read_mesh(std::istream& in) {
    expect(in, "mesh");
    if (next_count(in, "format version") != 1) throw io_error("unsupported mesh version");
    expect(in, "kind");
    const MeshKind kind = mesh_kind_from_string(next_token(in, "mesh kind"));
    expect(in, "dim");
    const auto dim = std::uint32_t(next_count(in, "dimension"));
    expect(in, "vertices");
    const std::size_t n = next_count(in, "vertex count");
    std::vector<std::array<double, 3>> vertices(n);
    for (auto& v : vertices)
        v = {next_real(in, "x"), next_real(in, "y"), next_real(in, "z")};
    expect(in, "edges");
    const std::size_t m = next_count(in, "edge count");
    std::vector<MeshEdge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto a = PointId(next_count(in, "edge endpoint"));
        const auto b = PointId(next_count(in, "edge endpoint"));
        const double w = next_real(in, "edge weight");
        edges.push_back({a, b, w});
    }
    return MeshManifold::from_parts(kind, dim, std::move(vertices), std::move(edges));
}

void save_mesh(const MeshManifold& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    write_mesh(out, mesh);
    if (!out) throw io_error("write failed on '" + path + "'");
}

MeshManifold load_mesh(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "'");
    return read_mesh(in);
}

} // namespace mgeo
