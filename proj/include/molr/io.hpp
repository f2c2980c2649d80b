// io.hpp -- the text record format for MOLR sets and incidence output.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "molr/core.hpp"
#include "molr/geometry.hpp"
#include "molr/symmetry.hpp"

namespace molr {

struct ParseError : Error {
    int line;
    ParseError(int ln, const std::string &msg)
        : Error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

// One record of a MOLR file:
//   MOLR n=<n> k=<k> t=<t> [aut=<order>] [flags=<H?T?sH?sT? or ->]
// followed by t blocks of k rows of n space-separated symbols.  Records are
// separated by blank lines; '#' starts a comment.
struct MolrRecord {
    MolrSet set;
    std::optional<std::uint64_t> aut;
    std::optional<RegularityFlags> flags;
};

std::string flags_to_string(const RegularityFlags &flags);
RegularityFlags flags_from_string(const std::string &text, int line_no);

std::vector<MolrRecord> read_records(std::istream &in);
std::vector<MolrRecord> read_records_text(const std::string &text);

void write_record(std::ostream &out, const MolrRecord &rec);
void write_records(std::ostream &out, const std::vector<MolrRecord> &recs);
std::string record_to_text(const MolrRecord &rec);

// Incidence output: one line per geometry line, the tag token followed by
// the sorted point indices ("row", "col", "sym:<rect>:<symbol>", "inf").
void write_incidence(std::ostream &out, const IncidenceStructure &s);

std::string plane_report_text(const PlaneReport &rep);

}  // namespace molr
