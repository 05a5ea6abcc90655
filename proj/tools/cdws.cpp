#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cdws/chord.hpp"
#include "cdws/decomp.hpp"
#include "cdws/gl11.hpp"
#include "cdws/graph.hpp"
#include "cdws/sl2.hpp"
#include "cdws/verify.hpp"

namespace {

using nlohmann::json;

struct Options {
    bool as_json = false;
};

void emit(const Options& opt, const std::string& text, const json& j) {
    if (opt.as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

std::string share_to_text(const cdws::Share& s) {
    std::string out = std::to_string(s.arc1_start) + "," + std::to_string(s.arc1_len) + ";" +
                      std::to_string(s.arc2_start) + "," + std::to_string(s.arc2_len) +
                      ";chords=";
    for (size_t i = 0; i < s.chords.size(); ++i)
        out += (i ? "," : "") + std::to_string(s.chords[i]);
    return out;
}

json share_to_json(const cdws::Share& s) {
    return {{"arc1", {s.arc1_start, s.arc1_len}},
            {"arc2", {s.arc2_start, s.arc2_len}},
            {"chords", s.chords}};
}

cdws::MutationSymmetry parse_symmetry(const std::string& name) {
    if (name == "identity")
        return cdws::MutationSymmetry::Identity;
    if (name == "swap")
        return cdws::MutationSymmetry::SwapArcs;
    if (name == "reverse")
        return cdws::MutationSymmetry::ReverseArcs;
    if (name == "rotate")
        return cdws::MutationSymmetry::RotateHalfTurn;
    cdws::fail("ParseError", "unknown symmetry '" + name + "'");
}

void write_fixture_corpus(const std::string& dir) {
    for (int n = 1; n <= 5; ++n) {
        json records = json::array();
        for (const cdws::ChordDiagram& d : cdws::enumerate_diagrams(n)) {
            cdws::SimpleGraph g = cdws::intersection_graph(d);
            records.push_back({{"diagram", d.to_string()},
                               {"graph", cdws::canonical_label(g).to_string()},
                               {"sl2", cdws::sl2_oracle(d).to_string()},
                               {"gl11", cdws::gl11_on_diagram(d).to_string()}});
        }
        std::ofstream out(dir + "/diagrams_n" + std::to_string(n) + ".json");
        if (!out)
            cdws::fail("ParseError", "cannot write fixtures into '" + dir + "'");
        out << records.dump(2) << "\n";
    }
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Chord diagrams, circle graphs, split decomposition, and the universal "
                 "sl(2) and gl(1|1) weight systems"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.as_json, "emit JSON instead of text");

    std::string word, graph_text, sym = "swap", ws_kind, verify_id, out_dir = "fixtures";
    int number = 0, max_n = -1;
    std::vector<int> share_spec;

    auto* parse_cmd = app.add_subcommand("parse", "normalize a double occurrence word");
    parse_cmd->add_option("word", word)->required();

    auto* canon_cmd = app.add_subcommand("canon", "canonical form of a diagram");
    canon_cmd->add_option("word", word)->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "all canonical diagrams with n chords");
    enum_cmd->add_option("n", number)->required();

    auto* igraph_cmd = app.add_subcommand("igraph", "intersection graph of a diagram");
    igraph_cmd->add_option("word", word)->required();

    auto* shares_cmd = app.add_subcommand("shares", "all shares of a diagram");
    shares_cmd->add_option("word", word)->required();

    auto* mutate_cmd = app.add_subcommand("mutate", "mutate a diagram along a share");
    mutate_cmd->add_option("word", word)->required();
    mutate_cmd->add_option("--share", share_spec, "arc1_start,arc1_len,arc2_start,arc2_len")
        ->expected(4)
        ->delimiter(',')
        ->required();
    mutate_cmd->add_option("--sym", sym, "identity|swap|reverse|rotate");

    auto* orbit_cmd = app.add_subcommand("orbit", "mutation orbit of a diagram");
    orbit_cmd->add_option("word", word)->required();

    auto* decomp_cmd = app.add_subcommand("decompose", "canonical split decomposition");
    decomp_cmd->add_option("graph", graph_text)->required();

    auto* realize_cmd = app.add_subcommand("realize", "all diagrams with this intersection graph");
    realize_cmd->add_option("graph", graph_text)->required();

    auto* ws_cmd = app.add_subcommand("ws", "evaluate a weight system");
    ws_cmd->add_option("system", ws_kind, "sl2|gl11")->required();
    ws_cmd->add_option("word", word);
    ws_cmd->add_option("--graph", graph_text, "evaluate gl11 on a graph instead");

    auto* verify_cmd = app.add_subcommand("verify", "run a theorem checker");
    verify_cmd
        ->add_option("check", verify_id,
                     "mutation-connectivity|graph-dependence-sl2|graph-dependence-gl11|"
                     "matroid-moves|decomposition")
        ->required();
    verify_cmd->add_option("--max", max_n, "size cap override");

    auto* fixtures_cmd = app.add_subcommand("fixtures", "write the precomputed corpus");
    fixtures_cmd->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage errors exit 2, --help exits 0
    }

    if (*parse_cmd) {
        cdws::ChordDiagram d = cdws::ChordDiagram::parse(word);
        emit(opt, d.to_string(), d.to_json());
    } else if (*canon_cmd) {
        cdws::ChordDiagram d = cdws::ChordDiagram::parse(word).canonical_form();
        emit(opt, d.to_string(), d.to_json());
    } else if (*enum_cmd) {
        json arr = json::array();
        for (const cdws::ChordDiagram& d : cdws::enumerate_diagrams(number)) {
            if (!opt.as_json)
                std::cout << d.to_string() << "\n";
            else
                arr.push_back(d.to_json());
        }
        if (opt.as_json)
            std::cout << arr.dump() << "\n";
    } else if (*igraph_cmd) {
        cdws::SimpleGraph g = cdws::intersection_graph(cdws::ChordDiagram::parse(word));
        emit(opt, g.to_string(), g.to_json());
    } else if (*shares_cmd) {
        json arr = json::array();
        for (const cdws::Share& s : cdws::find_shares(cdws::ChordDiagram::parse(word))) {
            if (!opt.as_json)
                std::cout << share_to_text(s) << "\n";
            else
                arr.push_back(share_to_json(s));
        }
        if (opt.as_json)
            std::cout << arr.dump() << "\n";
    } else if (*mutate_cmd) {
        cdws::Share s{share_spec[0], share_spec[1], share_spec[2], share_spec[3], {}};
        cdws::ChordDiagram d = cdws::ChordDiagram::parse(word);
        // the caller names arcs only; recover the chord set
        for (const cdws::Share& found : cdws::find_shares(d))
            if (found.arc1_start == s.arc1_start && found.arc1_len == s.arc1_len &&
                found.arc2_start == s.arc2_start && found.arc2_len == s.arc2_len)
                s.chords = found.chords;
        cdws::ChordDiagram m = cdws::mutate(d, s, parse_symmetry(sym));
        emit(opt, m.to_string(), m.to_json());
    } else if (*orbit_cmd) {
        json arr = json::array();
        for (const cdws::ChordDiagram& d :
             cdws::mutation_orbit(cdws::ChordDiagram::parse(word))) {
            if (!opt.as_json)
                std::cout << d.to_string() << "\n";
            else
                arr.push_back(d.to_json());
        }
        if (opt.as_json)
            std::cout << arr.dump() << "\n";
    } else if (*decomp_cmd) {
        cdws::DecompositionTree tree =
            cdws::canonical_decomposition(cdws::SimpleGraph::parse(graph_text));
        if (opt.as_json) {
            std::cout << tree.to_json().dump() << "\n";
        } else {
            for (const cdws::TreeComponent& tc : tree.components)
                std::cout << tc.kind.name() << " " << tc.graph.to_string() << "\n";
            for (const cdws::DashedEdge& d : tree.dashed)
                std::cout << "dashed " << d.comp1 << ":" << d.marker1 << " - " << d.comp2 << ":"
                          << d.marker2 << "\n";
        }
    } else if (*realize_cmd) {
        json arr = json::array();
        for (const cdws::ChordDiagram& d :
             cdws::enumerate_realizations(cdws::SimpleGraph::parse(graph_text))) {
            if (!opt.as_json)
                std::cout << d.to_string() << "\n";
            else
                arr.push_back(d.to_json());
        }
        if (opt.as_json)
            std::cout << arr.dump() << "\n";
    } else if (*ws_cmd) {
        cdws::MultiPoly value;
        if (!graph_text.empty()) {
            if (ws_kind != "gl11")
                cdws::fail("ParseError", "--graph is only meaningful for gl11");
            value = cdws::framed_conway(cdws::SimpleGraph::parse(graph_text));
        } else if (ws_kind == "sl2") {
            value = cdws::sl2_oracle(cdws::ChordDiagram::parse(word));
        } else if (ws_kind == "gl11") {
            value = cdws::gl11_on_diagram(cdws::ChordDiagram::parse(word));
        } else {
            cdws::fail("ParseError", "unknown weight system '" + ws_kind + "'");
        }
        emit(opt, value.to_string(), value.to_json());
    } else if (*verify_cmd) {
        cdws::VerificationReport report;
        if (verify_id == "mutation-connectivity")
            report = cdws::check_mutation_connectivity(max_n < 0 ? 5 : max_n);
        else if (verify_id == "graph-dependence-sl2")
            report = cdws::check_graph_dependence("sl2", max_n < 0 ? 5 : max_n);
        else if (verify_id == "graph-dependence-gl11")
            report = cdws::check_graph_dependence("gl11", max_n < 0 ? 6 : max_n);
        else if (verify_id == "matroid-moves")
            report = cdws::check_matroid_moves(max_n < 0 ? 4 : max_n);
        else if (verify_id == "decomposition")
            report = cdws::check_decomposition(max_n < 0 ? 6 : max_n);
        else
            cdws::fail("ParseError", "unknown check '" + verify_id + "'");
        emit(opt, report.to_string(), report.to_json());
        return report.pass() ? 0 : 1;
    } else if (*fixtures_cmd) {
        write_fixture_corpus(out_dir);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const cdws::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 1;
    }
}
