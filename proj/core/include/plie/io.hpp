// Plain-text readers and writers for every artifact the tools exchange:
// structure-constant files, group multiplication tables, orbit-report
// directories, transversal directories, and count reports. Text only, so
// outputs diff cleanly and golden files stay readable.
//
// Structure-constant format:
//   p=<p> n=<n> lambda=<l1,...,lt> side=<ring|algebra>
//   i j l value        (1-based indices; omitted entries are zero)
// Tokens are whitespace-separated; `#` starts a comment. Writers emit entries
// sorted by (i, j, l) with values reduced mod p, so equal tensors produce
// identical bytes.
//
// Group-table format:
//   order=<m> p=<p>
// followed by m rows of m element indices; the identity is index 0.
//
// A transversal directory holds `manifest.txt` (header `p=<p> n=<n>`, then one
// structure-constant filename per line) beside the listed files, each an
// all-ones-shape tensor.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "plie/budget.hpp"
#include "plie/correspondence.hpp"
#include "plie/counting.hpp"
#include "plie/group.hpp"
#include "plie/tensor.hpp"

namespace plie {

struct ParseError : std::runtime_error {
    std::string file;
    std::int64_t line;  // 1-based; 0 when the problem is not tied to a line

    ParseError(const std::string& file_, std::int64_t line_, const std::string& what_happened)
        : std::runtime_error(file_ + ":" + std::to_string(line_) + ": " + what_happened),
          file(file_),
          line(line_) {}
};

std::string tensor_to_text(const StructureTensor& T);
StructureTensor tensor_from_text(const std::string& text, const std::string& name = "<input>");
StructureTensor read_tensor(const std::string& path);
void write_tensor(const StructureTensor& T, const std::string& path);

std::string group_to_text(const GroupTable& G);
GroupTable group_from_text(const std::string& text, const std::string& name = "<input>");
GroupTable read_group_table(const std::string& path);
void write_group_table(const GroupTable& G, const std::string& path);

// The summary block: `orbits=<k>` plus one `orbit size=<s> rep=<file>` line
// per orbit, preceded by context comments.
std::string orbit_summary_text(const OrbitReport& rep);

// Writes rep files orbit_001.txt, ... plus summary.txt holding the summary
// block.
void write_orbit_report(const OrbitReport& rep, const std::string& dir);

// Reads a transversal directory (see header comment) and runs the full
// validation path: entry checks, pairwise non-isomorphism, and a completeness
// cross-check against exhaustive enumeration when budgets allow.
Transversal read_transversal(const std::string& dir, const Budgets& budgets = {}, int workers = 1);

// Writes manifest.txt plus entry_001.txt, ... for the transversal's algebras.
void write_transversal(const Transversal& tv, const std::string& dir);

void write_count_report(const CountReport& rep, const std::string& path);

}  // namespace plie
