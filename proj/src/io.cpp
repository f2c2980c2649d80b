#include "molr/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace molr {

std::string flags_to_string(const RegularityFlags &flags) {
    std::string s;
    if (flags.homogeneous) s += "H";
    if (flags.transitive) s += "T";
    if (flags.stepwise_homogeneous) s += "sH";
    if (flags.stepwise_transitive) s += "sT";
    return s.empty() ? "-" : s;
}

RegularityFlags flags_from_string(const std::string &text, int line_no) {
    RegularityFlags f;
    f.classified = true;
    if (text == "-") return f;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] == 'H') {
            f.homogeneous = true;
            ++i;
        } else if (text[i] == 'T') {
            f.transitive = true;
            ++i;
        } else if (text[i] == 's' && i + 1 < text.size() && text[i + 1] == 'H') {
            f.stepwise_homogeneous = true;
            i += 2;
        } else if (text[i] == 's' && i + 1 < text.size() && text[i + 1] == 'T') {
            f.stepwise_transitive = true;
            i += 2;
        } else {
            throw ParseError(line_no, "bad flags string '" + text + "'");
        }
    }
    return f;
}

namespace {

bool is_blank_or_comment(const std::string &line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool is_blank(const std::string &line) {
    for (char c : line)
        if (!isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::vector<MolrRecord> read_records(std::istream &in) {
    std::vector<MolrRecord> records;
    std::string line;
    int line_no = 0;

    auto next_content_line = [&](bool allow_eof) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!is_blank_or_comment(line)) return true;
            if (is_blank(line) && !allow_eof) continue;
        }
        if (!allow_eof) throw ParseError(line_no, "unexpected end of file inside a record");
        return false;
    };

    while (next_content_line(true)) {
        std::istringstream header(line);
        std::string magic;
        header >> magic;
        if (magic != "MOLR") throw ParseError(line_no, "expected a MOLR header");
        int n = -1, k = -1, t = -1;
        std::optional<std::uint64_t> aut;
        std::optional<RegularityFlags> flags;
        std::string field;
        while (header >> field) {
            const auto eq = field.find('=');
            if (eq == std::string::npos)
                throw ParseError(line_no, "bad header field '" + field + "'");
            const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
            try {
                if (key == "n")
                    n = std::stoi(val);
                else if (key == "k")
                    k = std::stoi(val);
                else if (key == "t")
                    t = std::stoi(val);
                else if (key == "aut")
                    aut = std::stoull(val);
                else if (key == "flags")
                    flags = flags_from_string(val, line_no);
                else
                    throw ParseError(line_no, "unknown header field '" + key + "'");
            } catch (const std::invalid_argument &) {
                throw ParseError(line_no, "bad value in field '" + field + "'");
            }
        }
        if (n <= 0 || k <= 0 || t <= 0)
            throw ParseError(line_no, "header must set n, k and t");

        std::vector<LatinRectangle> rects;
        for (int q = 0; q < t; ++q) {
            std::vector<Symbol> cells;
            cells.reserve(static_cast<size_t>(k) * n);
            for (int i = 0; i < k; ++i) {
                if (!next_content_line(false)) break;
                std::istringstream row(line);
                int v;
                int got = 0;
                while (row >> v) {
                    if (v < 0 || v >= n)
                        throw ParseError(line_no, "symbol " + std::to_string(v) + " out of range");
                    cells.push_back(static_cast<Symbol>(v));
                    ++got;
                }
                if (got != n)
                    throw ParseError(line_no, "expected " + std::to_string(n) + " symbols");
            }
            try {
                rects.push_back(validate_rectangle(k, n, cells));
            } catch (const Error &e) {
                throw ParseError(line_no, std::string("invalid rectangle: ") + e.what());
            }
        }
        MolrRecord rec;
        try {
            rec.set = validate_molr(rects);
        } catch (const Error &e) {
            throw ParseError(line_no, std::string("invalid record: ") + e.what());
        }
        rec.aut = aut;
        rec.flags = flags;
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<MolrRecord> read_records_text(const std::string &text) {
    std::istringstream in(text);
    return read_records(in);
}

void write_record(std::ostream &out, const MolrRecord &rec) {
    out << "MOLR n=" << rec.set.n() << " k=" << rec.set.k() << " t=" << rec.set.t();
    if (rec.aut) out << " aut=" << *rec.aut;
    if (rec.flags) out << " flags=" << flags_to_string(*rec.flags);
    out << "\n";
    for (const auto &r : rec.set.rects())
        for (int i = 0; i < rec.set.k(); ++i) {
            for (int j = 0; j < rec.set.n(); ++j) {
                if (j) out << ' ';
                out << int(r.at(i, j));
            }
            out << "\n";
        }
}

void write_records(std::ostream &out, const std::vector<MolrRecord> &recs) {
    for (size_t i = 0; i < recs.size(); ++i) {
        if (i) out << "\n";
        write_record(out, recs[i]);
    }
}

std::string record_to_text(const MolrRecord &rec) {
    std::ostringstream out;
    write_record(out, rec);
    return out.str();
}

void write_incidence(std::ostream &out, const IncidenceStructure &s) {
    out << "# points " << s.point_count << " lines " << s.lines.size() << "\n";
    for (const Line &l : s.lines) {
        switch (l.tag) {
            case LineTag::row: out << "row"; break;
            case LineTag::column: out << "col"; break;
            case LineTag::symbol: out << "sym:" << l.rect << ":" << l.symbol; break;
            case LineTag::infinity: out << "inf"; break;
        }
        for (int p : l.points) out << ' ' << p;
        out << "\n";
    }
}

std::string plane_report_text(const PlaneReport &rep) {
    std::ostringstream out;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "line-size>=2: " << yn(rep.line_size_ok) << "\n";
    out << "pair-coverage: " << yn(rep.pair_coverage_ok) << " (once=" << rep.pairs_once
        << " uncovered=" << rep.pairs_uncovered << " multi=" << rep.pairs_multi << ")\n";
    out << "off-line-point: " << yn(rep.has_off_line_point) << "\n";
    out << "quadrilateral: " << yn(rep.has_quadrilateral) << "\n";
    out << "plane: " << yn(rep.is_plane) << "\n";
    out << "P1: " << yn(rep.p1) << " P2: " << yn(rep.p2) << " P3: " << yn(rep.p3) << "\n";
    out << "classification: ";
    switch (rep.kind) {
        case PlaneKind::projective: out << "projective"; break;
        case PlaneKind::affine: out << "affine"; break;
        case PlaneKind::hyperbolic: out << "hyperbolic"; break;
        case PlaneKind::none: out << "none"; break;
    }
    out << "\n";
    return out.str();
}

}  // namespace molr
