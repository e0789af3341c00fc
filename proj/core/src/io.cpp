#include "plie/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "plie/fp.hpp"

namespace plie {

namespace {

// Lines with comments stripped, keeping 1-based line numbers for diagnostics.
struct Line {
    std::int64_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::int64_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

std::int64_t parse_int(const std::string& tok, const std::string& name, std::int64_t lineno,
                       const std::string& what) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(name, lineno, what + ": expected an integer, got '" + tok + "'");
    }
}

// Header tokens are key=value in a fixed order.
std::string header_value(const Line& line, std::size_t pos, const std::string& key,
                         const std::string& name) {
    if (pos >= line.tokens.size() || line.tokens[pos].rfind(key + "=", 0) != 0)
        throw ParseError(name, line.number,
                         "header must read '" + key + "=<value>' at position " +
                             std::to_string(pos + 1));
    return line.tokens[pos].substr(key.size() + 1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

std::string padded(std::int64_t k) {
    std::string s = std::to_string(k);
    while (s.size() < 3) s.insert(s.begin(), '0');
    return s;
}

}  // namespace

std::string tensor_to_text(const StructureTensor& T) {
    const Partition& shape = T.shape();
    std::string s = "p=" + std::to_string(T.p()) + " n=" + std::to_string(shape.n()) + " lambda=";
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(shape.size()); ++i) {
        if (i) s += ",";
        s += std::to_string(shape.part(i));
    }
    s += " side=" + side_name(T.side()) + "\n";
    std::int64_t t = T.t();
    for (std::int64_t i = 0; i < t; ++i)
        for (std::int64_t j = 0; j < t; ++j)
            for (std::int64_t l = 0; l < t; ++l)
                if (std::int64_t v = T.coeff(i, j, l); v != 0)
                    s += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
                         std::to_string(l + 1) + " " + std::to_string(v) + "\n";
    return s;
}

StructureTensor tensor_from_text(const std::string& text, const std::string& name) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(name, 0, "empty file: header line required");
    const Line& h = lines.front();
    if (h.tokens.size() != 4)
        throw ParseError(name, h.number, "header must read 'p=<p> n=<n> lambda=<parts> side=<side>'");
    std::int64_t p = parse_int(header_value(h, 0, "p", name), name, h.number, "p");
    std::int64_t n = parse_int(header_value(h, 1, "n", name), name, h.number, "n");
    std::string lambda = header_value(h, 2, "lambda", name);
    std::string side_str = header_value(h, 3, "side", name);

    if (p < 2) throw ParseError(name, h.number, "p must be at least 2");
    Partition shape = [&] {
        try {
            return Partition::parse(lambda);
        } catch (const std::exception& e) {
            throw ParseError(name, h.number, "bad lambda '" + lambda + "': " + e.what());
        }
    }();
    if (shape.n() != n)
        throw ParseError(name, h.number,
                         "lambda sums to " + std::to_string(shape.n()) + ", header says n=" +
                             std::to_string(n));
    Side side;
    if (side_str == "ring")
        side = Side::ring;
    else if (side_str == "algebra")
        side = Side::algebra;
    else
        throw ParseError(name, h.number, "side must be 'ring' or 'algebra', got '" + side_str + "'");

    StructureTensor T(p, shape, side);
    std::int64_t t = T.t();
    std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> seen;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens.size() != 4)
            throw ParseError(name, line.number, "entry lines read 'i j l value'");
        std::int64_t i = parse_int(line.tokens[0], name, line.number, "i");
        std::int64_t j = parse_int(line.tokens[1], name, line.number, "j");
        std::int64_t l = parse_int(line.tokens[2], name, line.number, "l");
        std::int64_t v = parse_int(line.tokens[3], name, line.number, "value");
        for (std::int64_t idx : {i, j, l})
            if (idx < 1 || idx > t)
                throw ParseError(name, line.number,
                                 "index " + std::to_string(idx) + " outside 1.." + std::to_string(t));
        if (!seen.insert({i, j, l}).second)
            throw ParseError(name, line.number,
                             "duplicate entry for (" + std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(l) + ")");
        T.set_coeff(i - 1, j - 1, l - 1, mod_reduce(v, p));
    }
    return T;
}

StructureTensor read_tensor(const std::string& path) {
    return tensor_from_text(read_file(path), path);
}

void write_tensor(const StructureTensor& T, const std::string& path) {
    write_file(path, tensor_to_text(T));
}

std::string group_to_text(const GroupTable& G) {
    std::string s = "order=" + std::to_string(G.order) + " p=" + std::to_string(G.p) + "\n";
    for (std::int64_t a = 0; a < G.order; ++a) {
        for (std::int64_t b = 0; b < G.order; ++b) {
            if (b) s += " ";
            s += std::to_string(G.mul(a, b));
        }
        s += "\n";
    }
    return s;
}

GroupTable group_from_text(const std::string& text, const std::string& name) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(name, 0, "empty file: header line required");
    const Line& h = lines.front();
    if (h.tokens.size() != 2)
        throw ParseError(name, h.number, "header must read 'order=<m> p=<p>'");
    std::int64_t m = parse_int(header_value(h, 0, "order", name), name, h.number, "order");
    std::int64_t p = parse_int(header_value(h, 1, "p", name), name, h.number, "p");
    if (m < 1) throw ParseError(name, h.number, "order must be positive");
    if (static_cast<std::int64_t>(lines.size()) != m + 1)
        throw ParseError(name, h.number,
                         "expected " + std::to_string(m) + " table rows, found " +
                             std::to_string(lines.size() - 1));

    GroupTable G;
    G.p = p;
    G.order = m;
    G.table.resize(static_cast<std::size_t>(m * m));
    for (std::int64_t a = 0; a < m; ++a) {
        const Line& row = lines[static_cast<std::size_t>(a) + 1];
        if (static_cast<std::int64_t>(row.tokens.size()) != m)
            throw ParseError(name, row.number,
                             "row has " + std::to_string(row.tokens.size()) + " entries, expected " +
                                 std::to_string(m));
        for (std::int64_t b = 0; b < m; ++b) {
            std::int64_t v = parse_int(row.tokens[static_cast<std::size_t>(b)], name, row.number,
                                       "table entry");
            if (v < 0 || v >= m)
                throw ParseError(name, row.number,
                                 "entry " + std::to_string(v) + " outside 0.." + std::to_string(m - 1));
            G.table[static_cast<std::size_t>(a * m + b)] = static_cast<std::int32_t>(v);
        }
    }
    if (!has_identity(G))
        throw ParseError(name, lines[1].number, "index 0 is not a two-sided identity");
    return G;
}

GroupTable read_group_table(const std::string& path) {
    return group_from_text(read_file(path), path);
}

void write_group_table(const GroupTable& G, const std::string& path) {
    write_file(path, group_to_text(G));
}

std::string orbit_summary_text(const OrbitReport& rep) {
    std::string summary = "# p=" + std::to_string(rep.p) + " shape=" + rep.shape.to_string() +
                          " side=" + side_name(rep.side) + "\n";
    summary += "# filter: alternating=" + std::string(rep.filter.alternating ? "yes" : "no") +
               " jacobi=" + (rep.filter.jacobi ? "yes" : "no") +
               " nilpotent=" + (rep.filter.nilpotent ? "yes" : "no") + "\n";
    summary += "# space=" + std::to_string(rep.space_size) +
               " group=" + std::to_string(rep.group_size) + "\n";
    summary += "orbits=" + std::to_string(rep.orbit_count()) + "\n";
    for (std::int64_t k = 0; k < rep.orbit_count(); ++k)
        summary += "orbit size=" + std::to_string(rep.sizes[static_cast<std::size_t>(k)]) +
                   " rep=orbit_" + padded(k + 1) + ".txt\n";
    return summary;
}

void write_orbit_report(const OrbitReport& rep, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (std::int64_t k = 0; k < rep.orbit_count(); ++k)
        write_tensor(rep.reps[static_cast<std::size_t>(k)], dir + "/orbit_" + padded(k + 1) + ".txt");
    write_file(dir + "/summary.txt", orbit_summary_text(rep));
}

Transversal read_transversal(const std::string& dir, const Budgets& budgets, int workers) {
    std::string manifest = dir + "/manifest.txt";
    std::vector<Line> lines = tokenize(read_file(manifest));
    if (lines.empty()) throw ParseError(manifest, 0, "empty manifest: header line required");
    const Line& h = lines.front();
    if (h.tokens.size() != 2) throw ParseError(manifest, h.number, "header must read 'p=<p> n=<n>'");
    std::int64_t p = parse_int(header_value(h, 0, "p", manifest), manifest, h.number, "p");
    std::int64_t n = parse_int(header_value(h, 1, "n", manifest), manifest, h.number, "n");

    std::vector<FpLieAlgebra> entries;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens.size() != 1)
            throw ParseError(manifest, line.number, "entry lines hold one filename");
        StructureTensor T = read_tensor(dir + "/" + line.tokens[0]);
        if (T.p() != p)
            throw ParseError(manifest, line.number,
                             "entry has p=" + std::to_string(T.p()) + " but manifest says p=" +
                                 std::to_string(p));
        try {
            entries.push_back(to_lie_algebra(T));
        } catch (const std::exception& e) {
            throw ParseError(manifest, line.number,
                             "entry '" + line.tokens[0] + "' rejected: " + e.what());
        }
    }
    return transversal_from_algebras(p, n, std::move(entries), budgets, workers);
}

void write_transversal(const Transversal& tv, const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::string manifest = "p=" + std::to_string(tv.p) + " n=" + std::to_string(tv.n) + "\n";
    Partition ones(std::vector<std::int64_t>(static_cast<std::size_t>(tv.n), 1));
    for (std::size_t k = 0; k < tv.entries.size(); ++k) {
        std::string file = "entry_" + padded(static_cast<std::int64_t>(k) + 1) + ".txt";
        write_tensor(to_tensor(tv.entries[k]), dir + "/" + file);
        manifest += file + "\n";
    }
    write_file(dir + "/manifest.txt", manifest);
}

void write_count_report(const CountReport& rep, const std::string& path) {
    write_file(path, rep.to_string());
}

}  // namespace plie
