// molr -- enumerate, classify and verify sets of mutually orthogonal Latin
// rectangles, build the classical field constructions and translate sets
// into incidence geometry.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "molr/enumerate.hpp"
#include "molr/galois.hpp"
#include "molr/geometry.hpp"
#include "molr/io.hpp"
#include "molr/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 4;

std::vector<molr::MolrRecord> read_input(const std::string &path) {
    if (path == "-") return molr::read_records(std::cin);
    std::ifstream in(path);
    if (!in) throw molr::Error("cannot open " + path);
    return molr::read_records(in);
}

void with_output(const std::string &path, const std::function<void(std::ostream &)> &fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw molr::Error("cannot open " + path);
    fn(out);
}

molr::RegularityFilter parse_filter(const std::string &name) {
    if (name == "none") return molr::RegularityFilter::none;
    if (name == "stepwise-homogeneous") return molr::RegularityFilter::stepwise_homogeneous;
    if (name == "stepwise-transitive") return molr::RegularityFilter::stepwise_transitive;
    throw CLI::ValidationError("filter", "unknown filter '" + name + "'");
}

std::uint64_t default_budget() {
    if (const char *env = std::getenv("MOLR_BUDGET")) return std::strtoull(env, nullptr, 10);
    return 5'000'000;
}

void print_cell(std::ostream &out, const molr::CellCounts &cell, bool with_paratopism) {
    out << "cell " << cell.k << "x" << cell.n << " t=" << cell.t
        << ": classes=" << cell.all.total;
    if (with_paratopism) out << " paratopism=" << cell.paratopism_classes;
    out << "\n  homogeneous=" << cell.homogeneous.total
        << " transitive=" << cell.transitive.total
        << " stepwise-homogeneous=" << cell.stepwise_homogeneous.total
        << " stepwise-transitive=" << cell.stepwise_transitive.total << "\n  aut:";
    for (const auto &[order, count] : cell.all.aut_histogram)
        out << " " << order << ":" << count;
    out << "\n";
}

molr::MolrRecord record_of(const molr::ClassRecord &rec) {
    molr::MolrRecord out;
    out.set = rec.representative;
    out.aut = rec.aut_order;
    out.flags = rec.flags;
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"mutually orthogonal Latin rectangle toolkit"};
    app.require_subcommand(1);

    // ---- enumerate ----
    auto *cmd_enum = app.add_subcommand("enumerate", "enumerate isotopism classes");
    int en_n = 0, en_t = 0, en_k = 0, en_workers = 1;
    std::string en_filter = "none", en_out;
    std::uint64_t en_budget = default_budget();
    bool en_paratopism = false;
    cmd_enum->add_option("-n", en_n, "column/symbol count")->required();
    cmd_enum->add_option("-t", en_t, "number of rectangles")->required();
    cmd_enum->add_option("-k", en_k, "row count")->required();
    cmd_enum->add_option("--filter", en_filter,
                         "none | stepwise-homogeneous | stepwise-transitive");
    cmd_enum->add_option("-o,--output", en_out, "output path ('-' = stdout)");
    cmd_enum->add_option("--budget", en_budget, "class cap per level");
    cmd_enum->add_option("--workers", en_workers, "worker threads");
    cmd_enum->add_flag("--paratopism", en_paratopism, "also count paratopism classes");

    // ---- verify ----
    auto *cmd_verify = app.add_subcommand("verify", "recompute and diff the embedded tables");
    std::string vf_suite;
    int vf_workers = 1;
    cmd_verify->add_option("suite", vf_suite, "n4 | n5 | n6 | n7-selected | galois | fixtures")
        ->required();
    cmd_verify->add_option("--workers", vf_workers, "worker threads");

    // ---- classify ----
    auto *cmd_classify = app.add_subcommand("classify", "annotate records with aut and flags");
    std::string cl_in = "-", cl_out;
    cmd_classify->add_option("input", cl_in, "record file ('-' = stdin)");
    cmd_classify->add_option("-o,--output", cl_out, "output path");

    // ---- canon ----
    auto *cmd_canon = app.add_subcommand("canon", "replace records by canonical forms");
    std::string cn_in = "-", cn_out;
    cmd_canon->add_option("input", cn_in, "record file ('-' = stdin)");
    cmd_canon->add_option("-o,--output", cn_out, "output path");

    // ---- paratopism ----
    auto *cmd_para = app.add_subcommand("paratopism", "merge records into paratopism classes");
    std::string pa_in = "-", pa_out;
    cmd_para->add_option("input", pa_in, "record file ('-' = stdin)");
    cmd_para->add_option("-o,--output", pa_out, "output path");

    // ---- galois ----
    auto *cmd_galois = app.add_subcommand("galois", "emit the field-based (n-1)-MOLS");
    int ga_n = 0;
    std::string ga_out;
    cmd_galois->add_option("-n", ga_n, "field order")->required();
    cmd_galois->add_option("-o,--output", ga_out, "output path");

    // ---- geometry ----
    auto *cmd_geom = app.add_subcommand("geometry", "translate a record into incidence geometry");
    std::string ge_in = "-", ge_out, ge_action = "net", ge_lines;
    cmd_geom->add_option("input", ge_in, "record file ('-' = stdin)");
    cmd_geom->add_option("--action", ge_action, "net | complete | sandler");
    cmd_geom->add_option("--lines", ge_lines, "comma-separated line indices (sandler)");
    cmd_geom->add_option("--base", ge_action, "")->group("");   // hidden alias, unused
    cmd_geom->add_option("-o,--output", ge_out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_enum->parsed()) {
            molr::EnumerateOptions opts{en_workers, en_budget};
            auto run = molr::run_column(en_n, en_t, en_k, parse_filter(en_filter), opts,
                                        en_paratopism);
            with_output(en_out, [&](std::ostream &out) {
                std::vector<molr::MolrRecord> recs;
                recs.reserve(run.final_frontier.classes.size());
                for (const auto &rec : run.final_frontier.classes) recs.push_back(record_of(rec));
                molr::write_records(out, recs);
            });
            print_cell(std::cerr, run.table.per_k.back(), en_paratopism);
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            molr::EnumerateOptions opts;
            opts.workers = vf_workers;
            opts.budget = default_budget();
            molr::VerifyReport report = molr::verify_suite(vf_suite, opts);
            for (const auto &line : report.lines) std::cout << line << "\n";
            for (const auto &issue : report.issues)
                std::cout << "MISMATCH " << issue.where << ": expected " << issue.expected
                          << ", got " << issue.got << "\n";
            std::cout << (report.ok ? "OK" : "FAILED") << " suite " << vf_suite << "\n";
            return report.ok ? kExitOk : kExitMismatch;
        }

        if (cmd_classify->parsed()) {
            auto records = read_input(cl_in);
            for (auto &rec : records) {
                molr::ClassRecord cls = molr::canonical_form(rec.set);
                rec.aut = cls.aut_order;
                molr::RegularityFlags flags;
                flags.homogeneous = molr::is_homogeneous(rec.set);
                flags.transitive = molr::is_transitive(cls);
                flags.classified = true;
                rec.flags = flags;
            }
            with_output(cl_out, [&](std::ostream &out) { molr::write_records(out, records); });
            return kExitOk;
        }

        if (cmd_canon->parsed()) {
            auto records = read_input(cn_in);
            std::vector<molr::MolrRecord> out_records;
            for (const auto &rec : records) {
                molr::ClassRecord cls = molr::canonical_form(rec.set);
                molr::MolrRecord out;
                out.set = cls.representative;
                out.aut = cls.aut_order;
                out_records.push_back(std::move(out));
            }
            with_output(cn_out, [&](std::ostream &out) { molr::write_records(out, out_records); });
            return kExitOk;
        }

        if (cmd_para->parsed()) {
            auto records = read_input(pa_in);
            std::map<std::string, molr::MolrRecord> classes;
            for (const auto &rec : records) {
                std::string key = molr::paratopism_key(rec.set);
                molr::ClassRecord cls = molr::canonical_form(rec.set);
                auto it = classes.find(key);
                if (it == classes.end() ||
                    molr::molr_stream_key(cls.representative) <
                        molr::molr_stream_key(it->second.set)) {
                    molr::MolrRecord keep;
                    keep.set = cls.representative;
                    keep.aut = cls.aut_order;
                    classes[key] = std::move(keep);
                }
            }
            std::vector<molr::MolrRecord> merged;
            for (auto &[key, rec] : classes) merged.push_back(std::move(rec));
            with_output(pa_out, [&](std::ostream &out) {
                out << "# " << records.size() << " records in " << merged.size()
                    << " paratopism classes\n";
                molr::write_records(out, merged);
            });
            return kExitOk;
        }

        if (cmd_galois->parsed()) {
            molr::MolrRecord rec;
            rec.set = molr::galois_mols(ga_n);
            with_output(ga_out, [&](std::ostream &out) { molr::write_record(out, rec); });
            return kExitOk;
        }

        if (cmd_geom->parsed()) {
            auto records = read_input(ge_in);
            if (records.empty()) throw molr::Error("no records in input");
            const molr::MolrSet &m = records.front().set;
            with_output(ge_out, [&](std::ostream &out) {
                if (ge_action == "net") {
                    molr::IncidenceStructure net = molr::partial_net(m);
                    molr::write_incidence(out, net);
                    out << molr::plane_report_text(molr::check_plane(net));
                } else if (ge_action == "complete") {
                    molr::IncidenceStructure plane = molr::complete_to_projective(m);
                    molr::write_incidence(out, plane);
                    out << molr::plane_report_text(molr::check_plane(plane));
                } else if (ge_action == "sandler") {
                    std::vector<int> selection;
                    std::stringstream ss(ge_lines);
                    std::string tok;
                    while (std::getline(ss, tok, ',')) selection.push_back(std::stoi(tok));
                    molr::IncidenceStructure base =
                        (m.t() == m.n() - 1 && m.k() == m.n())
                            ? molr::complete_to_projective(m)
                            : molr::partial_net(m);
                    molr::SandlerResult res = molr::sandler_delete(base, selection);
                    molr::write_incidence(out, res.residue);
                    out << molr::plane_report_text(res.report);
                    if (res.curvature) out << "curvature: " << *res.curvature << "\n";
                } else {
                    throw molr::Error("unknown action '" + ge_action + "'");
                }
            });
            return kExitOk;
        }
    } catch (const molr::BudgetExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const molr::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const molr::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
