#include "ringcode/cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ringcode/enumeration.hpp"

namespace ringcode {

namespace {

using nlohmann::json;

constexpr const char* kCsvHeader = "generator,code_size,s_profile,reversible,rc";

std::string profile_text(const std::vector<std::pair<uint32_t, uint32_t>>& profile) {
    std::string out;
    for (const auto& [d, i] : profile) {
        if (!out.empty()) out += '|';
        out += std::to_string(d) + ':' + std::to_string(i);
    }
    return out;
}

json profile_json(const std::vector<std::pair<uint32_t, uint32_t>>& profile) {
    json arr = json::array();
    for (const auto& [d, i] : profile) arr.push_back(json::array({d, i}));
    return arr;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void print_conditions(std::ostream& out, const ChainRing& ring, const Verdict& v) {
    for (const ConditionCheck& c : v.conditions) {
        out << "  [" << (c.holds ? "ok" : "no") << "] " << c.id;
        if (c.id != "zero_rc_membership") out << " (f_" << c.generator_index << ")";
        if (c.detail.empty() && c.unit_witness)
            out << ": u = " << ring.element(*c.unit_witness).str();
        else if (!c.detail.empty())
            out << ": " << c.detail;
        out << "\n";
    }
}

json conditions_json(const ChainRing& ring, const Verdict& v) {
    json arr = json::array();
    for (const ConditionCheck& c : v.conditions) {
        json item = {{"id", c.id},
                     {"generator_index", c.generator_index},
                     {"holds", c.holds},
                     {"detail", c.detail}};
        item["unit_witness"] =
            c.unit_witness ? json(ring.element(*c.unit_witness).str()) : json(nullptr);
        arr.push_back(std::move(item));
    }
    return arr;
}

struct CommonOpts {
    std::string ring_spec;
    uint32_t n = 0;
    std::string u_text = "1";
    std::string k_text;
    std::string format = "md";
    bool no_oracle = false;
    uint64_t bound = CyclicCode::kDefaultMaxWords;
};

void add_pair_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--ring", o.ring_spec, "ring spec, e.g. Z4 or F2[v]/v^3")->required();
    cmd->add_option("--n", o.n, "code length")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--u", o.u_text, "involution unit of the complement pair")->required();
    cmd->add_option("--k", o.k_text, "offset element of the complement pair")->required();
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "md"}));
    cmd->add_flag("--no-oracle", o.no_oracle, "skip the brute-force audit of every verdict");
    cmd->add_option("--bound", o.bound, "largest codeword-set size the tools may enumerate");
}

int cmd_classify(const CommonOpts& o, const std::vector<std::string>& gen_texts,
                 std::ostream& out) {
    ChainRing ring = make_ring(o.ring_spec);
    RingElem u = parse_element(ring, o.u_text);
    RingElem k = parse_element(ring, o.k_text);
    std::vector<CyclicPoly> gens;
    for (const std::string& t : gen_texts) gens.push_back(parse_poly(ring, o.n, t));
    CyclicCode code = CyclicCode::span(ring, o.n, gens, o.bound);
    CodeAnalysis a = analyze(code, u, k, !o.no_oracle);

    std::string gen_echo;
    for (const CyclicPoly& g : gens) {
        if (!gen_echo.empty()) gen_echo += ';';
        gen_echo += g.str();
    }

    if (o.format == "csv") {
        out << kCsvHeader << "\n"
            << gen_echo << ',' << code.size() << ',' << profile_text(code.degree_profile())
            << ',' << yesno(a.reversible.value) << ',' << yesno(a.rc.value) << "\n";
    } else if (o.format == "json") {
        json j = {{"ring", ring.spec_string()},
                  {"n", o.n},
                  {"u", u.str()},
                  {"k", k.str()},
                  {"code_size", code.size()},
                  {"S_profile", profile_json(code.degree_profile())},
                  {"reversible", a.reversible.value},
                  {"rc", a.rc.value},
                  {"audited", a.audited}};
        json jg = json::array();
        for (const CyclicPoly& g : gens) jg.push_back(g.str());
        j["generators"] = std::move(jg);
        j["reversible_conditions"] = conditions_json(ring, a.reversible);
        j["rc_conditions"] = conditions_json(ring, a.rc);
        out << j.dump(2) << "\n";
    } else {
        out << "ring: " << ring.spec_string() << "  (size " << ring.size() << ")\n"
            << "length: " << o.n << "\n"
            << "generators: " << gen_echo << "\n"
            << "code size: " << code.size() << "\n";
        const auto& S = code.minimal_generators();
        for (size_t j = 0; j < S.size(); ++j)
            out << "S: f_" << j << " = " << S[j].first.str() << "  (degree "
                << *S[j].first.degree() << ", valuation " << S[j].second << ")\n";
        out << "s_profile: " << profile_text(code.degree_profile()) << "\n";
        out << "reversible: " << yesno(a.reversible.value) << "\n";
        print_conditions(out, ring, a.reversible);
        out << "rc with u = " << u.str() << ", k = " << k.str() << ": " << yesno(a.rc.value)
            << "\n";
        print_conditions(out, ring, a.rc);
        if (a.audited) out << "audited: every verdict re-checked by exhaustive enumeration\n";
    }
    return 0;
}

int cmd_enumerate(const CommonOpts& o, std::ostream& out) {
    ChainRing ring = make_ring(o.ring_spec);
    RingElem u = parse_element(ring, o.u_text);
    RingElem k = parse_element(ring, o.k_text);
    std::vector<ClassificationRow> rows = classify_all(ring, o.n, u, k, !o.no_oracle, o.bound);

    uint64_t rc_count = 0;
    for (const ClassificationRow& r : rows) rc_count += r.analysis.rc.value ? 1 : 0;

    if (o.format == "csv") {
        out << kCsvHeader << "\n";
        for (const ClassificationRow& r : rows)
            out << r.canonical_generator().str() << ',' << r.code.size() << ','
                << profile_text(r.code.degree_profile()) << ','
                << yesno(r.analysis.reversible.value) << ',' << yesno(r.analysis.rc.value)
                << "\n";
    } else if (o.format == "json") {
        json jrows = json::array();
        for (const ClassificationRow& r : rows)
            jrows.push_back({{"canonical_generator", r.canonical_generator().str()},
                             {"code_size", r.code.size()},
                             {"S_profile", profile_json(r.code.degree_profile())},
                             {"reversible", r.analysis.reversible.value},
                             {"rc", r.analysis.rc.value}});
        json j = {{"ring", ring.spec_string()}, {"n", o.n},          {"u", u.str()},
                  {"k", k.str()},               {"census_size", rows.size()},
                  {"rc_count", rc_count},       {"rows", std::move(jrows)}};
        out << j.dump(2) << "\n";
    } else {
        out << "| generator | code_size | s_profile | reversible | rc |\n"
            << "|---|---|---|---|---|\n";
        for (const ClassificationRow& r : rows)
            out << "| " << r.canonical_generator().str() << " | " << r.code.size() << " | "
                << profile_text(r.code.degree_profile()) << " | "
                << yesno(r.analysis.reversible.value) << " | " << yesno(r.analysis.rc.value)
                << " |\n";
        out << "\n" << rows.size() << " codes over " << ring.spec_string() << " at length "
            << o.n << ", " << rc_count << " reversible complement with u = " << u.str()
            << ", k = " << k.str() << "\n";
    }
    return 0;
}

int cmd_reproduce_table(const std::string& format, std::ostream& out) {
    ChainRing ring = make_ring("F2[v]/v^3");
    RingElem one = ring.one();
    std::vector<ClassificationRow> census = classify_all(ring, 4, one, one, true);
    MatchReport report = match_reference_table(builtin_reference_table(), census);

    if (format == "csv") {
        out << "row,generator,claimed_rc,computed_rc,agrees\n";
        for (const RowMatch& m : report.rows)
            out << m.index << ',' << m.expression << ',' << yesno(m.rc_claim) << ','
                << yesno(m.computed_rc) << ',' << yesno(m.agrees) << "\n";
    } else if (format == "json") {
        json jrows = json::array();
        for (const RowMatch& m : report.rows)
            jrows.push_back({{"index", m.index},
                             {"generator", m.expression},
                             {"claimed_rc", m.rc_claim},
                             {"computed_rc", m.computed_rc},
                             {"agrees", m.agrees},
                             {"census_position", m.census_position}});
        json j = {{"rows", std::move(jrows)},
                  {"summary",
                   {{"row_count", report.rows.size()},
                    {"agreements", report.agreements},
                    {"divergent_rows", report.divergent_rows},
                    {"distinct_row_ideals", report.distinct_row_ideals},
                    {"census_size", report.census_size},
                    {"uncovered_census_positions", report.uncovered},
                    {"perfect", report.perfect()}}}};
        out << j.dump(2) << "\n";
    } else {
        for (const RowMatch& m : report.rows) {
            std::ostringstream gen;
            gen << '<' << m.expression << '>';
            out << "row " << std::setw(2) << m.index << "  " << std::left << std::setw(24)
                << gen.str() << std::right << "  claimed " << std::setw(3) << yesno(m.rc_claim)
                << "  computed " << std::setw(3) << yesno(m.computed_rc) << "  "
                << (m.agrees ? "agree" : "DIVERGES") << "\n";
        }
        out << "\nrows agreeing with the reference verdicts: " << report.agreements << "/"
            << report.rows.size() << "\n";
        if (!report.divergent_rows.empty()) {
            out << "divergent rows:";
            for (uint32_t r : report.divergent_rows) out << ' ' << r;
            out << "\n";
        }
        out << "distinct ideals named by the rows: " << report.distinct_row_ideals << "\n"
            << "census codes: " << report.census_size << "\n"
            << "census codes named by no row: " << report.uncovered.size() << "\n";
    }
    return report.perfect() ? 0 : 2;
}

int cmd_ring_info(const std::string& spec, const std::string& format, std::ostream& out) {
    ChainRing ring = make_ring(spec);
    uint64_t pair_count = 0;
    for (const RingElem& u : units(ring)) {
        if (!(u * u == ring.one())) continue;
        for (uint32_t ki = 0; ki < ring.size(); ++ki)
            if (validate_uk(u, ring.element(ki))) ++pair_count;
    }
    bool z_family = ring.family() == RingFamily::IntegersModPrimePower;
    std::string family = z_family ? "integers modulo a prime power"
                                  : "field extension with a nilpotent generator";

    if (format == "json") {
        json j = {{"ring", ring.spec_string()},
                  {"family", family},
                  {"size", ring.size()},
                  {"prime", ring.prime()},
                  {"residue_field_size", ring.residue_field_size()},
                  {"nilpotency", ring.nilpotency()},
                  {"maximal_ideal_generator", ring.gamma().str()},
                  {"units", ring.unit_count()},
                  {"admissible_pairs", pair_count}};
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "ring,family,size,prime,residue_field_size,nilpotency,units,admissible_pairs\n"
            << ring.spec_string() << ",\"" << family << "\"," << ring.size() << ','
            << ring.prime() << ',' << ring.residue_field_size() << ',' << ring.nilpotency()
            << ',' << ring.unit_count() << ',' << pair_count << "\n";
    } else {
        out << "ring: " << ring.spec_string() << "\n"
            << "family: " << family << "\n"
            << "size: " << ring.size() << "\n"
            << "residue field size: " << ring.residue_field_size() << "  (prime " << ring.prime()
            << ")\n"
            << "nilpotency: " << ring.nilpotency() << "\n"
            << "maximal ideal generator: " << ring.gamma().str() << "\n"
            << "units: " << ring.unit_count() << "\n"
            << "admissible (u,k) pairs: " << pair_count << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cyclic-code reversibility and reversible-complement analysis over chain rings",
                 "ringcode"};
    app.require_subcommand(1);

    CommonOpts classify_opts;
    std::vector<std::string> gen_texts;
    CLI::App* classify = app.add_subcommand(
        "classify", "analyze the span of the given generators for one (u,k) pair");
    add_pair_options(classify, classify_opts);
    classify->add_option("--gen", gen_texts, "generator polynomial (repeatable)")->required();

    CommonOpts enum_opts;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "census of all principal cyclic codes with verdicts");
    add_pair_options(enumerate, enum_opts);

    std::string repro_format = "md";
    CLI::App* reproduce = app.add_subcommand(
        "reproduce-table", "audit the shipped reference classification row by row");
    reproduce->add_option("--format", repro_format, "output format")
        ->check(CLI::IsMember({"csv", "json", "md"}));

    std::string info_spec, info_format = "md";
    CLI::App* ring_info = app.add_subcommand("ring-info", "describe a chain ring");
    ring_info->add_option("--ring", info_spec, "ring spec")->required();
    ring_info->add_option("--format", info_format, "output format")
        ->check(CLI::IsMember({"csv", "json", "md"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (app.got_subcommand(classify)) return cmd_classify(classify_opts, gen_texts, out);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(enum_opts, out);
        if (app.got_subcommand(reproduce)) return cmd_reproduce_table(repro_format, out);
        return cmd_ring_info(info_spec, info_format, out);
    } catch (const VerificationError& e) {
        err << "verification mismatch: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ringcode
