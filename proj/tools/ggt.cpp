// Command line surface: every analysis as a reproducible batch command
// with deterministic text, JSON, DOT or CSV output.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggt/ball.hpp"
#include "ggt/coarse.hpp"
#include "ggt/houghton.hpp"
#include "ggt/median.hpp"
#include "ggt/pocset.hpp"
#include "ggt/window.hpp"

namespace {

constexpr int kExitBadArguments = 1;
constexpr int kExitInconclusive = 2;

struct ActionOptions {
    std::string family = "houghton";
    int n = 2;
    std::string sigma = "(2,3)";
    std::string basepoint = "1,1";
    int radius = 12;
};

struct OutputOptions {
    std::string path;  // empty = stdout
    bool json = false;
};

void add_action_flags(CLI::App* cmd, ActionOptions& opts)
{
    cmd->add_option("--family", opts.family, "houghton | houghton-ext | line")
        ->check(CLI::IsMember({"houghton", "houghton-ext", "line"}));
    cmd->add_option("--n", opts.n, "number of rays (>= 2)");
    cmd->add_option("--sigma", opts.sigma, "ray permutation for houghton-ext, e.g. (2,3)");
    cmd->add_option("--basepoint", opts.basepoint, "acted-on point, e.g. 1,1");
    cmd->add_option("--radius", opts.radius, "ball radius R");
}

void add_output_flags(CLI::App* cmd, OutputOptions& opts)
{
    cmd->add_option("--output", opts.path, "write to file instead of stdout");
    cmd->add_flag("--json", opts.json, "emit versioned JSON");
}

ggt::MarkedAction make_action(const ActionOptions& opts)
{
    if (opts.family == "line") return ggt::line_action();
    if (opts.family == "houghton-ext")
        return ggt::extended_action(opts.n, ggt::permutation_from_cycles(opts.sigma, opts.n));
    return ggt::houghton_action(opts.n);
}

ggt::RayPoint parse_point_flag(const std::string& text)
{
    int ray = 0, position = 0;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> ray >> comma >> position) || comma != ',')
        throw std::invalid_argument("basepoint must look like '1,1'");
    return {ray, position};
}

void emit(const OutputOptions& opts, const std::string& text)
{
    if (opts.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + opts.path);
    out << text;
}

// ---- cube helpers ----------------------------------------------------

ggt::MedianGraph graph_from_flags(const std::string& shape, const std::string& input)
{
    if (!input.empty()) {
        std::ifstream in(input);
        if (!in) throw std::invalid_argument("cannot read graph file " + input);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return ggt::median_graph_from_json(buffer.str());
    }
    auto colon = shape.find(':');
    std::string kind = shape.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : shape.substr(colon + 1);
    auto int_arg = [&](int fallback) { return args.empty() ? fallback : std::stoi(args); };
    if (kind == "path") return ggt::path_graph(int_arg(5));
    if (kind == "cube") return ggt::cube_graph(int_arg(3));
    if (kind == "tripod") return ggt::tripod_graph();
    if (kind == "cycle") return ggt::cycle_graph(int_arg(5));
    if (kind == "ladder") return ggt::ladder_graph(int_arg(4));
    if (kind == "spider") {
        auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("spider shape needs legs,length");
        return ggt::spider_graph(std::stoi(args.substr(0, comma)),
                                 std::stoi(args.substr(comma + 1)));
    }
    throw std::invalid_argument("unknown shape '" + shape + "'");
}

ggt::PocSet walls_from_flags(const std::string& walls, const std::string& input)
{
    if (!input.empty()) {
        std::ifstream in(input);
        if (!in) throw std::invalid_argument("cannot read walls file " + input);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return ggt::pocset_from_json(buffer.str());
    }
    auto colon = walls.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("walls must look like crossing:3 or chain:3");
    int k = std::stoi(walls.substr(colon + 1));
    std::string kind = walls.substr(0, colon);
    if (kind == "crossing") return ggt::crossing_walls(k);
    if (kind == "chain") return ggt::chain_walls(k);
    throw std::invalid_argument("unknown wall system '" + walls + "'");
}

ggt::WindowedShiftComplex window_from_flags(const std::string& complex_name, int size, int step)
{
    if (complex_name == "line") return ggt::line_window(size);
    if (complex_name == "staircase") return ggt::staircase_window(size);
    if (complex_name == "ladder") return ggt::ladder_window(size, step);
    throw std::invalid_argument("unknown complex '" + complex_name + "'");
}

int plane_from_edge_flag(const ggt::WindowedShiftComplex& w, const std::string& edge)
{
    std::vector<int> nums;
    std::string token;
    std::istringstream in(edge);
    while (std::getline(in, token, ',')) nums.push_back(std::stoi(token));
    if (nums.size() != 4)
        throw std::invalid_argument("edge must be 'x1,y1,x2,y2' in window coordinates");
    auto u = w.vertex_at({nums[0], nums[1]});
    auto v = w.vertex_at({nums[2], nums[3]});
    if (!u || !v) throw std::invalid_argument("edge endpoints outside the window");
    return w.plane_of_edge(*u, *v);
}

std::string skewer_kind_name(const ggt::SkewerResult& result)
{
    switch (result.kind) {
        case ggt::SkewerResult::Kind::Skewers: return "Skewers";
        case ggt::SkewerResult::Kind::StabilisesPower: return "StabilisesPower";
        case ggt::SkewerResult::Kind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string direction_name(const ggt::SkewerResult& result)
{
    switch (result.direction) {
        case ggt::SkewerResult::Direction::PlusInPlus: return "PlusInPlus";
        case ggt::SkewerResult::Direction::MinusInMinus: return "MinusInMinus";
        case ggt::SkewerResult::Direction::None: return "None";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Schreier balls, coarse invariants and cube complex combinatorics"};
    app.require_subcommand(1);
    bool strict = false;
    app.add_flag("--strict", strict, "exit 2 when a window verdict is inconclusive");

    int exit_code = 0;

    // ---- schreier ----
    auto* schreier = app.add_subcommand("schreier", "materialize a Schreier ball");
    ActionOptions schreier_action;
    OutputOptions schreier_out;
    std::string schreier_format = "json";
    add_action_flags(schreier, schreier_action);
    add_output_flags(schreier, schreier_out);
    schreier->add_option("--format", schreier_format, "json | dot")
        ->check(CLI::IsMember({"json", "dot"}));
    schreier->callback([&] {
        auto ball = build_ball(make_action(schreier_action),
                               parse_point_flag(schreier_action.basepoint),
                               schreier_action.radius);
        emit(schreier_out,
             schreier_format == "dot" ? ggt::ball_to_dot(ball) : ggt::ball_to_json(ball));
    });

    // ---- growth ----
    auto* growth = app.add_subcommand("growth", "ball growth table");
    ActionOptions growth_action;
    OutputOptions growth_out;
    std::string growth_format = "csv";
    add_action_flags(growth, growth_action);
    add_output_flags(growth, growth_out);
    growth->add_option("--format", growth_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    growth->callback([&] {
        auto ball = build_ball(make_action(growth_action),
                               parse_point_flag(growth_action.basepoint), growth_action.radius);
        auto table = ggt::growth_table(ball);
        auto check = ggt::linear_growth_check(table);
        if (growth_format == "json" || growth_out.json)
            emit(growth_out, ggt::growth_check_to_json(check, table));
        else
            emit(growth_out, ggt::growth_to_csv(table));
    });

    // ---- ends ----
    auto* ends = app.add_subcommand("ends", "deep components of the annulus");
    ActionOptions ends_action;
    OutputOptions ends_out;
    int ends_r = 2;
    add_action_flags(ends, ends_action);
    add_output_flags(ends, ends_out);
    ends->add_option("--r", ends_r, "inner radius");
    ends->callback([&] {
        auto ball = build_ball(make_action(ends_action), parse_point_flag(ends_action.basepoint),
                               ends_action.radius);
        auto profile = ggt::ends_profile(ball, {ends_r});
        if (ends_out.json)
            emit(ends_out, ggt::ends_to_json(profile));
        else
            emit(ends_out, std::to_string(profile.counts[0].second) + "\n");
    });

    // ---- narrowness ----
    auto* narrow = app.add_subcommand("narrowness", "disjoint deep witness packing");
    ActionOptions narrow_action;
    OutputOptions narrow_out;
    int narrow_mu = 1, narrow_r = 2;
    add_action_flags(narrow, narrow_action);
    add_output_flags(narrow, narrow_out);
    narrow->add_option("--mu", narrow_mu, "coarse connection distance");
    narrow->add_option("--r", narrow_r, "inner radius");
    narrow->callback([&] {
        auto ball = build_ball(make_action(narrow_action),
                               parse_point_flag(narrow_action.basepoint), narrow_action.radius);
        auto report = ggt::narrowness_profile(ball, narrow_mu, narrow_r);
        if (narrow_out.json) {
            emit(narrow_out, ggt::narrowness_to_json(report, ball));
        } else {
            std::ostringstream text;
            text << "witness_count " << report.witness_count << " (mu=" << report.mu
                 << ", r=" << report.inner_radius << ", R=" << report.outer_radius
                 << ", method: " << report.method << ")\n";
            emit(narrow_out, text.str());
        }
    });

    // ---- double-cosets ----
    auto* cosets = app.add_subcommand("double-cosets", "orbit classes under loop words");
    ActionOptions cosets_action;
    OutputOptions cosets_out;
    int cosets_budget = 6;
    add_action_flags(cosets, cosets_action);
    add_output_flags(cosets, cosets_out);
    cosets->add_option("--budget", cosets_budget, "loop word length budget");
    cosets->callback([&] {
        auto ball = build_ball(make_action(cosets_action),
                               parse_point_flag(cosets_action.basepoint), cosets_action.radius);
        auto partition = ggt::double_coset_orbits(ball, cosets_budget);
        if (cosets_out.json) {
            emit(cosets_out, ggt::double_cosets_to_json(partition, ball));
        } else {
            std::ostringstream text;
            text << partition.class_count << " classes, stable = "
                 << (partition.stable ? "true" : "false") << "\n";
            emit(cosets_out, text.str());
        }
    });

    // ---- comm-probe ----
    auto* comm = app.add_subcommand("comm-probe", "growth of a coset image");
    ActionOptions comm_action;
    OutputOptions comm_out;
    std::string comm_word;
    int comm_budget = 6;
    add_action_flags(comm, comm_action);
    add_output_flags(comm, comm_out);
    comm->add_option("--g", comm_word, "generator word, e.g. 'g1 g2^-1'")->required();
    comm->add_option("--budget", comm_budget, "loop word length budget");
    comm->callback([&] {
        auto ball = build_ball(make_action(comm_action), parse_point_flag(comm_action.basepoint),
                               comm_action.radius);
        auto probe = ggt::commensurator_probe(ball, ggt::parse_word(comm_word), comm_budget);
        if (comm_out.json) {
            emit(comm_out, ggt::comm_probe_to_json(probe, ball, comm_budget));
        } else {
            emit(comm_out, std::string(probe.verdict == ggt::ProbeVerdict::GrowingSoFar
                                           ? "GrowingSoFar"
                                           : "BoundedSoFar") +
                               "\n");
        }
    });

    // ---- coset-distance ----
    auto* codist = app.add_subcommand("coset-distance", "distance from H to gH, capped");
    ActionOptions codist_action;
    OutputOptions codist_out;
    std::string codist_word;
    int codist_budget = 6, codist_cap = 4;
    add_action_flags(codist, codist_action);
    add_output_flags(codist, codist_out);
    codist->add_option("--g", codist_word, "generator word")->required();
    codist->add_option("--D", codist_cap, "distance cap");
    codist->add_option("--budget", codist_budget, "loop word length budget");
    codist->callback([&] {
        auto ball = build_ball(make_action(codist_action),
                               parse_point_flag(codist_action.basepoint), codist_action.radius);
        auto word = ggt::parse_word(codist_word);
        auto result = ggt::coset_distance_probe(ball, word, codist_cap, codist_budget);
        if (codist_out.json) {
            emit(codist_out,
                 ggt::coset_distance_to_json(result, ball, word, codist_cap, codist_budget));
        } else {
            std::ostringstream text;
            if (result.exact)
                text << result.value << "\n";
            else
                text << "at least " << result.value << "\n";
            emit(codist_out, text.str());
        }
    });

    // ---- element ----
    auto* element = app.add_subcommand("element", "parse, normalize and apply elements");
    OutputOptions element_out;
    std::string element_text, element_word, element_apply;
    int element_n = 2;
    std::string element_sigma = "id";
    bool element_invert = false;
    add_output_flags(element, element_out);
    element->add_option("--element", element_text, "element in text form");
    element->add_option("--word", element_word, "generator word to realize");
    element->add_option("--n", element_n, "ray count for --word");
    element->add_option("--sigma", element_sigma, "sigma for alpha in --word");
    element->add_option("--apply", element_apply, "point to apply, e.g. 1,1");
    element->add_flag("--invert", element_invert, "invert before printing");
    element->callback([&] {
        std::optional<ggt::HoughtonElement> value;
        if (!element_text.empty()) value = ggt::parse_element(element_text);
        if (!element_word.empty()) {
            auto action = element_sigma == "id"
                              ? ggt::houghton_action(element_n)
                              : ggt::extended_action(element_n, ggt::permutation_from_cycles(
                                                                    element_sigma, element_n));
            bool has_beta = std::any_of(action.generators.begin(), action.generators.end(),
                                        [](const auto& g) { return g.first == "beta"; });
            if (!has_beta) action.generators.emplace_back("beta", ggt::beta(element_n));
            value = ggt::word_element(action, ggt::parse_word(element_word));
        }
        if (!value) throw std::invalid_argument("element: need --element or --word");
        if (element_invert) value = ggt::invert(*value);

        if (element_out.json) {
            nlohmann::json j;
            j["schema"] = "ggt/element/v1";
            j["element"] = ggt::format_element(*value);
            if (!element_apply.empty()) {
                auto q = value->apply(parse_point_flag(element_apply));
                j["applied"] = {q.ray, q.position};
            }
            emit(element_out, j.dump(2) + "\n");
        } else {
            std::ostringstream text;
            text << ggt::format_element(*value) << "\n";
            if (!element_apply.empty()) {
                auto p = parse_point_flag(element_apply);
                text << ggt::to_string(value->apply(p)) << "\n";
            }
            emit(element_out, text.str());
        }
    });

    // ---- cube ----
    auto* cube = app.add_subcommand("cube", "cube complex combinatorics");
    cube->require_subcommand(1);

    std::string cube_shape = "tripod", cube_input;
    std::string cube_walls = "crossing:3", cube_walls_input;
    std::string cube_complex = "line", cube_edge = "0,0,1,0", cube_k_edge = "5,0,6,0";
    int cube_window = 20, cube_step = 1, cube_power = 1, cube_steps = 4;
    OutputOptions cube_out;

    auto add_graph_flags = [&](CLI::App* sub) {
        sub->add_option("--shape", cube_shape,
                        "path:k | cube:k | tripod | spider:legs,len | cycle:k | ladder:k");
        sub->add_option("--input", cube_input, "median graph JSON file");
        add_output_flags(sub, cube_out);
    };
    auto add_window_flags = [&](CLI::App* sub) {
        sub->add_option("--complex", cube_complex, "line | staircase | ladder");
        sub->add_option("--window", cube_window, "window size");
        sub->add_option("--step", cube_step, "ladder shift step");
        sub->add_option("--edge", cube_edge, "edge of h as x1,y1,x2,y2");
        add_output_flags(sub, cube_out);
    };

    auto* check_median = cube->add_subcommand("check-median", "median axiom check");
    add_graph_flags(check_median);
    check_median->callback([&] {
        auto g = graph_from_flags(cube_shape, cube_input);
        auto check = ggt::is_median(g);
        if (cube_out.json) {
            nlohmann::json j;
            j["schema"] = "ggt/check-median/v1";
            j["median"] = check.ok;
            if (!check.ok) {
                j["counterexample"] = check.counterexample;
                j["median_count"] = check.median_count;
            }
            emit(cube_out, j.dump(2) + "\n");
        } else if (check.ok) {
            emit(cube_out, "median\n");
        } else {
            std::ostringstream text;
            text << "not median: triple (" << check.counterexample[0] << ", "
                 << check.counterexample[1] << ", " << check.counterexample[2] << ") has "
                 << check.median_count << " medians\n";
            emit(cube_out, text.str());
        }
    });

    auto* planes_cmd = cube->add_subcommand("hyperplanes", "edge classes and halfspaces");
    add_graph_flags(planes_cmd);
    planes_cmd->callback([&] {
        auto g = graph_from_flags(cube_shape, cube_input);
        auto planes = ggt::hyperplanes(g);
        if (cube_out.json) {
            nlohmann::json j;
            j["schema"] = "ggt/hyperplanes/v1";
            j["count"] = planes.size();
            auto& list = j["hyperplanes"] = nlohmann::json::array();
            for (const auto& h : planes) {
                nlohmann::json entry;
                entry["id"] = h.id;
                auto& edges = entry["edges"] = nlohmann::json::array();
                for (int e : h.edge_ids) edges.push_back({g.edges[e].first, g.edges[e].second});
                entry["plus_size"] = h.plus.size();
                entry["minus_size"] = h.minus.size();
                list.push_back(std::move(entry));
            }
            emit(cube_out, j.dump(2) + "\n");
        } else {
            std::ostringstream text;
            text << planes.size() << " hyperplanes\n";
            for (const auto& h : planes) {
                text << "  #" << h.id << ": " << h.edge_ids.size() << " edges, halfspaces "
                     << h.minus.size() << " | " << h.plus.size() << "\n";
            }
            emit(cube_out, text.str());
        }
    });

    auto* triples_cmd = cube->add_subcommand("facing-triples", "pairwise disjoint non-separating triples");
    add_graph_flags(triples_cmd);
    triples_cmd->callback([&] {
        auto g = graph_from_flags(cube_shape, cube_input);
        auto planes = ggt::hyperplanes(g);
        auto triples = ggt::facing_triples(g, planes);
        if (cube_out.json) {
            nlohmann::json j;
            j["schema"] = "ggt/facing-triples/v1";
            j["count"] = triples.size();
            auto& list = j["triples"] = nlohmann::json::array();
            for (const auto& [a, b, c] : triples) list.push_back({a, b, c});
            emit(cube_out, j.dump(2) + "\n");
        } else {
            emit(cube_out, std::to_string(triples.size()) + "\n");
        }
    });

    auto* dual_cmd = cube->add_subcommand("dual", "Sageev dual of a wall system");
    dual_cmd->add_option("--walls", cube_walls, "crossing:k | chain:k");
    dual_cmd->add_option("--input", cube_walls_input, "poc-set JSON file");
    add_output_flags(dual_cmd, cube_out);
    dual_cmd->callback([&] {
        auto p = walls_from_flags(cube_walls, cube_walls_input);
        auto dual = ggt::dual_cube_complex(p);
        if (cube_out.json) {
            nlohmann::json j;
            j["schema"] = "ggt/dual/v1";
            j["vertex_count"] = dual.complex.vertex_count();
            j["edge_count"] = dual.complex.edge_count();
            j["connected"] = dual.connected;
            j["orientations"] = dual.orientations;
            auto& edges = j["edges"] = nlohmann::json::array();
            for (const auto& [u, v] : dual.complex.edges) edges.push_back({u, v});
            emit(cube_out, j.dump(2) + "\n");
        } else {
            std::ostringstream text;
            text << dual.complex.vertex_count() << " vertices, " << dual.complex.edge_count()
                 << " edges" << (dual.connected ? "" : " (disconnected)") << "\n";
            emit(cube_out, text.str());
        }
    });

    auto* skewer_cmd = cube->add_subcommand("skewer", "does the shift skewer h?");
    add_window_flags(skewer_cmd);
    skewer_cmd->add_option("--N", cube_steps, "largest power to try");
    skewer_cmd->callback([&] {
        auto w = window_from_flags(cube_complex, cube_window, cube_step);
        auto result = ggt::skewer_check(w, plane_from_edge_flag(w, cube_edge), cube_steps);
        if (cube_out.json) {
            nlohmann::json j;
            j["schema"] = "ggt/skewer/v1";
            j["window"] = cube_window;
            j["kind"] = skewer_kind_name(result);
            j["power"] = result.power;
            j["direction"] = direction_name(result);
            emit(cube_out, j.dump(2) + "\n");
        } else {
            std::ostringstream text;
            text << skewer_kind_name(result) << "(" << result.power << ")";
            if (result.direction != ggt::SkewerResult::Direction::None)
                text << " " << direction_name(result);
            text << "\n";
            emit(cube_out, text.str());
        }
        if (strict && result.kind == ggt::SkewerResult::Kind::Inconclusive)
            exit_code = kExitInconclusive;
    });

    auto* symdiff_cmd = cube->add_subcommand("symdiff", "crossing-set symmetric difference");
    add_window_flags(symdiff_cmd);
    symdiff_cmd->add_option("--power", cube_power, "shift power");
    symdiff_cmd->callback([&] {
        auto w = window_from_flags(cube_complex, cube_window, cube_step);
        auto diff = ggt::hyperplane_symdiff(w, plane_from_edge_flag(w, cube_edge), cube_power);
        if (cube_out.json) {
            nlohmann::json j;
            j["schema"] = "ggt/symdiff/v1";
            j["window"] = cube_window;
            j["power"] = cube_power;
            j["planes"] = diff.planes;
            j["verified_within_window"] = diff.verified;
            emit(cube_out, j.dump(2) + "\n");
        } else {
            std::ostringstream text;
            text << diff.planes.size() << " hyperplanes"
                 << (diff.verified ? " (verified)" : " (window-limited)") << "\n";
            emit(cube_out, text.str());
        }
        if (strict && !diff.verified) exit_code = kExitInconclusive;
    });

    auto* transfer_cmd = cube->add_subcommand("transfer", "transfer homomorphism value");
    add_window_flags(transfer_cmd);
    transfer_cmd->add_option("--power", cube_power, "shift power");
    transfer_cmd->callback([&] {
        auto w = window_from_flags(cube_complex, cube_window, cube_step);
        auto result = ggt::transfer(w, plane_from_edge_flag(w, cube_edge), cube_power);
        if (cube_out.json) {
            nlohmann::json j;
            j["schema"] = "ggt/transfer/v1";
            j["window"] = cube_window;
            j["power"] = cube_power;
            j["inconclusive"] = result.inconclusive;
            if (!result.inconclusive) {
                j["value"] = result.value;
                j["verified_within_window"] = result.verified;
            }
            emit(cube_out, j.dump(2) + "\n");
        } else if (result.inconclusive) {
            emit(cube_out, "Inconclusive\n");
        } else {
            std::ostringstream text;
            text << result.value << (result.verified ? " (verified)" : " (window-limited)")
                 << "\n";
            emit(cube_out, text.str());
        }
        if (strict && (result.inconclusive || !result.verified))
            exit_code = kExitInconclusive;
    });

    auto* sep_cmd = cube->add_subcommand("sep-index", "least separated image gap");
    add_window_flags(sep_cmd);
    sep_cmd->add_option("--k-edge", cube_k_edge, "edge of the separating hyperplane k");
    sep_cmd->add_option("--N", cube_steps, "largest |power| to scan");
    sep_cmd->callback([&] {
        auto w = window_from_flags(cube_complex, cube_window, cube_step);
        int value = ggt::separation_index(w, plane_from_edge_flag(w, cube_k_edge),
                                          plane_from_edge_flag(w, cube_edge), cube_steps);
        if (cube_out.json) {
            nlohmann::json j;
            j["schema"] = "ggt/sep-index/v1";
            j["window"] = cube_window;
            j["N"] = cube_steps;
            j["value"] = value;
            emit(cube_out, j.dump(2) + "\n");
        } else {
            emit(cube_out, std::to_string(value) + "\n");
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }
    return exit_code;
}
