#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "aplike/cli.hpp"
#include "aplike/error.hpp"
#include "aplike/expansion.hpp"
#include "aplike/inevitability.hpp"
#include "aplike/stable_pairs.hpp"
#include "aplike/structure.hpp"
#include "aplike/triples.hpp"

namespace aplike::cli {

  namespace {

    struct Options {
      std::string                command;
      std::string                monoid_path;
      std::string                variety = "A";
      bool                       maximal    = false;
      bool                       idempotent = false;
      std::vector<std::string>   decide;
      std::optional<std::size_t> cap;
      unsigned                   threads = 1;
      std::optional<std::string> cache;
      std::string                dot;
      std::size_t                iterate = 1;
      std::string                graph;
      bool                       sweep     = false;
      std::size_t                max_order = MAX_EXHAUSTIVE_ORDER;
      std::size_t                towers    = 0;
      std::string                out_dir;
    };

    Variety parse_variety(std::string const& text) {
      if (text == "A") {
        return Variety::A;
      }
      if (text == "M") {
        return Variety::M;
      }
      throw Error(ErrorCode::InvalidInput, "field 'variety': expected A or M, got '" + text + "'");
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream out(path);
      out << text;
      if (!out) {
        throw Error(ErrorCode::InvalidInput, "field 'dot': cannot write '" + path + "'");
      }
    }

    Json sets_to_json(std::vector<PointSet> const& sets) {
      Json result = Json::array();
      for (auto const& Z : sets) {
        result.push_back(to_json(Z));
      }
      return result;
    }

    Json classes_to_json(std::vector<PointSet> const& classes) {
      return sets_to_json(classes);
    }

    Json report_to_json(Monoid const& M, StablePairReport const& r, PowerMonoid const* PL) {
      Json j;
      j["variety"] = to_string(r.variety);
      j["Y"]       = to_json(r.Y);
      j["N"]       = to_json(r.N);
      j["verdict"] = r.verdict;
      if (!r.verdict) {
        j["certificate"] = nullptr;
      } else if (r.variety == Variety::M) {
        j["certificate"] = {{"chain", r.chain}};
      } else {
        j["certificate"] = {{"Y_prime", to_json(*r.Y_prime)}, {"W", sets_to_json(r.W)}};
      }
      if (r.verdict) {
        j["certificate_verified"] = !certificate_error(M, r, PL).has_value();
      }
      return j;
    }

    Json report_to_json(Monoid const& M, TripleReport const& r, PowerMonoid const& PL) {
      Json j;
      j["A"]       = to_json(r.A);
      j["B"]       = to_json(r.B);
      j["C"]       = to_json(r.C);
      j["verdict"] = r.verdict;
      if (!r.verdict) {
        j["certificate"] = nullptr;
        return j;
      }
      Json c;
      c["case"]    = r.case_tag;
      c["A_prime"] = to_json(*r.A2);
      c["B_prime"] = to_json(*r.B2);
      c["C_prime"] = to_json(*r.C2);
      if (r.S) {
        c["S"] = to_json(*r.S);
      }
      if (r.T) {
        c["T"] = to_json(*r.T);
      }
      if (r.case_tag == 3) {
        c["exponent"] = r.exponent;
      }
      j["certificate"]          = std::move(c);
      j["certificate_verified"] = !certificate_error(M, r, PL).has_value();
      return j;
    }

    Json census_to_json(Census const& c) {
      return {{"variety", c.variety},
              {"library_monoids", c.library_monoids},
              {"genmaps", c.genmaps},
              {"witnesses", c.witnesses},
              {"max_order", c.max_order},
              {"max_target_order", c.max_target_order},
              {"tower_depth", c.tower_depth},
              {"tower_witnesses", c.tower_witnesses},
              {"towers_skipped", c.towers_skipped}};
    }

    // --decide takes either one JSON object holding every named part, or
    // one value (inline JSON or a file) per part.
    std::vector<Json> decide_parts(Options const& o, std::vector<std::string> const& names) {
      std::vector<Json> parts;
      if (o.decide.size() == 1) {
        auto const json = parse_json_or_file(o.decide[0], "decide");
        if (json.is_object()) {
          for (auto const& name : names) {
            if (!json.contains(name)) {
              throw Error(ErrorCode::InvalidInput, "field 'decide." + name + "': missing");
            }
            parts.push_back(json.at(name));
          }
          return parts;
        }
      }
      if (o.decide.size() != names.size()) {
        throw Error(ErrorCode::InvalidInput,
                    "field 'decide': expected an object or " + std::to_string(names.size())
                        + " values");
      }
      for (std::size_t i = 0; i < names.size(); ++i) {
        parts.push_back(parse_json_or_file(o.decide[i], "decide." + names[i]));
      }
      return parts;
    }

    PointSet decide_set(Json const& json, Monoid const& M, std::string const& field) {
      if (json.is_number_unsigned()) {
        return point_set_from_json(Json::array({json}), M, field);
      }
      return point_set_from_json(json, M, field);
    }

    Json analyze(Monoid const& M, Options const& o) {
      auto const g = green(M);
      Json       r;
      r["order"]    = M.order();
      r["identity"] = M.identity();
      Json gens     = Json::object();
      for (auto const& gen : M.generators()) {
        gens[gen.letter] = gen.element;
      }
      r["generators"]   = std::move(gens);
      r["aperiodic"]    = is_aperiodic(M);
      r["idempotents"]  = to_json(M.idempotents());
      r["green"]        = {{"L", classes_to_json(g.L_classes)},
                           {"R", classes_to_json(g.R_classes)},
                           {"J", classes_to_json(g.J_classes)},
                           {"H", classes_to_json(g.H_classes)}};
      r["minimal_ideal"]     = to_json(minimal_ideal(M));
      r["ER"]                = is_ER(M);
      r["R_trivial_band"]    = is_R_trivial_band(M, M.all());
      r["internal_L_chain"]  = is_internal_L_chain(M, M.all());
      r["absolute_type_I"]   = is_absolute_type_I(M, M.all());
      if (!o.dot.empty()) {
        write_file(o.dot, eggbox_dot(M, g));
      }
      return r;
    }

    Json expand_command(Monoid const& M, Options const& o) {
      if (o.iterate == 0) {
        throw Error(ErrorCode::InvalidInput, "field 'iterate': must be at least 1");
      }
      auto const tower = expand_iterated(M, o.iterate, o.cap.value_or(DEFAULT_ELEMENT_CAP));
      auto const& top  = tower.levels.back();
      Json        r;
      Json        sizes = Json::array();
      for (auto const& level : tower.levels) {
        sizes.push_back(level.monoid.order());
      }
      r["levels"]    = std::move(sizes);
      r["expansion"] = monoid_to_json(top.monoid);
      r["eta"]       = tower.eta_to_base(M);
      Json elements  = Json::array();
      for (auto const& e : top.elements) {
        Json cuts = Json::array();
        for (auto const& [u, v] : e.cut_pairs(top.base.order())) {
          cuts.push_back({u, v});
        }
        elements.push_back({{"diag", e.diag}, {"cuts", std::move(cuts)}});
      }
      r["elements"] = std::move(elements);
      if (!o.dot.empty()) {
        write_file(o.dot, cayley_dot(top.monoid));
      }
      return r;
    }

    Json pointlikes_command(Monoid const& M, Options const& o) {
      auto const PL = cached_pointlikes(M, cache_dir(o.cache), o.cap.value_or(DEFAULT_FAMILY_CAP));
      Json       r;
      r["count"] = PL.size();
      if (o.maximal) {
        r["maximal"] = sets_to_json(maximal_pointlikes(PL));
      }
      if (o.idempotent) {
        r["idempotent"] = sets_to_json(idempotent_pointlikes(PL));
      }
      if (!o.maximal && !o.idempotent) {
        r["members"] = power_monoid_to_json(PL);
      }
      return r;
    }

    SearchOptions search_options(Options const& o) {
      SearchOptions s;
      s.threads = o.threads;
      if (o.cap) {
        s.submonoid_cap = *o.cap;
      }
      return s;
    }

    Json stable_pairs_command(Monoid const& M, Options const& o) {
      auto const variety = parse_variety(o.variety);
      if (o.decide.empty() && !o.maximal) {
        throw Error(ErrorCode::InvalidInput, "stable-pairs needs --decide or --maximal");
      }
      std::optional<PowerMonoid> PL;
      if (variety == Variety::A) {
        PL.emplace(cached_pointlikes(M, cache_dir(o.cache), DEFAULT_FAMILY_CAP));
      }
      PowerMonoid const* pl = PL ? &*PL : nullptr;
      Json               r;
      r["variety"] = to_string(variety);
      if (!o.decide.empty()) {
        auto const parts = decide_parts(o, {"Y", "N"});
        auto const Y     = decide_set(parts[0], M, "decide.Y");
        auto const N     = decide_set(parts[1], M, "decide.N");
        if (variety == Variety::M) {
          if (Y.size() != 1) {
            throw Error(ErrorCode::InvalidInput,
                        "field 'decide.Y': M-stable pairs need a single element");
          }
          r["decision"] = report_to_json(M, m_stable_decide(M, Y.first(), N), nullptr);
        } else {
          r["decision"] = report_to_json(M, a_stable_decide(*PL, Y, N, search_options(o)), pl);
        }
      }
      if (o.maximal) {
        auto const reports = variety == Variety::M ? m_stable_maximal(M)
                                                   : a_stable_maximal(*PL, search_options(o));
        Json list = Json::array();
        for (auto const& rep : reports) {
          list.push_back(report_to_json(M, rep, pl));
        }
        r["maximal"] = std::move(list);
      }
      return r;
    }

    Json triples_command(Monoid const& M, Options const& o) {
      if (o.decide.empty() && !o.maximal) {
        throw Error(ErrorCode::InvalidInput, "triples needs --decide or --maximal");
      }
      auto const PL = cached_pointlikes(M, cache_dir(o.cache), o.cap.value_or(DEFAULT_FAMILY_CAP));
      Json       r;
      if (!o.decide.empty()) {
        auto const parts = decide_parts(o, {"A", "B", "C"});
        auto const rep   = a_triple_decide(PL,
                                         decide_set(parts[0], M, "decide.A"),
                                         decide_set(parts[1], M, "decide.B"),
                                         decide_set(parts[2], M, "decide.C"));
        r["decision"] = report_to_json(M, rep, PL);
      }
      if (o.maximal) {
        Json list = Json::array();
        for (auto const& rep : a_triple_maximal(PL)) {
          list.push_back(report_to_json(M, rep, PL));
        }
        r["maximal"] = std::move(list);
      }
      return r;
    }

    Json assignment_json(LabellingResult const& res) {
      return {{"vertices", res.vertices}, {"edges", res.edges}};
    }

    Json inevitable_command(Monoid const& M, Options const& o) {
      if (o.graph.empty()) {
        throw Error(ErrorCode::InvalidInput, "field 'graph': missing");
      }
      auto const graph = graph_from_json(parse_json_or_file(o.graph, "graph"), M);
      Json       r;
      r["graph"] = graph_to_json(graph);
      if (!o.sweep) {
        std::vector<element_id> images;
        for (auto const& g : M.generators()) {
          images.push_back(g.element);
        }
        auto const res = check_labelling(graph, pair_relation(M, M, images, "self"));
        r["witness"]   = "self";
        r["sat"]       = res.sat;
        if (res.sat) {
          r["assignment"] = assignment_json(res);
        }
        return r;
      }
      WitnessConfig config;
      config.variety     = parse_variety(o.variety);
      config.max_order   = o.max_order;
      config.tower_depth = o.towers;
      config.threads     = o.threads;
      if (o.cap) {
        config.cap = *o.cap;
      }
      auto const sweep     = witness_sweep(graph, M, config);
      r["verdict"]         = sweep.refuted ? "refuted" : "consistent";
      r["conclusive"]      = sweep.refuted;
      if (sweep.refuted) {
        auto const& w = *sweep.witness;
        r["refuting_witness"] = {{"index", *sweep.witness_index},
                                 {"name", w.name},
                                 {"target", monoid_to_json(*w.target)},
                                 {"genmap", w.genmap}};
      } else {
        r["note"] = "no witness refutes the labelling; this is not a proof of inevitability";
      }
      r["census"] = census_to_json(sweep.census);
      return r;
    }

    Json gen_library_command(Options const& o) {
      if (o.out_dir.empty()) {
        throw Error(ErrorCode::InvalidInput, "field 'out': missing");
      }
      auto const variety = parse_variety(o.variety);
      auto library = variety == Variety::A ? aperiodic_library(o.max_order)
                                           : full_library(o.max_order);
      if (variety == Variety::M) {
        for (auto& entry : curated_aperiodic()) {
          library.push_back(std::move(entry));
        }
      }
      write_library(o.out_dir, library);
      Json list = Json::array();
      for (auto const& entry : library) {
        list.push_back({{"name", entry.name},
                        {"order", entry.monoid.order()},
                        {"aperiodic", entry.aperiodic}});
      }
      return {{"count", library.size()}, {"monoids", std::move(list)}};
    }

    // Everything that determines the result, in a fixed layout.
    std::string hash_input(Options const& o, std::optional<Monoid> const& M) {
      Json j;
      j["command"] = o.command;
      if (M) {
        j["monoid"] = monoid_to_json(*M);
      }
      j["variety"]    = o.variety;
      j["maximal"]    = o.maximal;
      j["idempotent"] = o.idempotent;
      Json decide     = Json::array();
      for (auto const& d : o.decide) {
        decide.push_back(parse_json_or_file(d, "decide"));
      }
      j["decide"]  = std::move(decide);
      j["cap"]     = o.cap ? Json(*o.cap) : Json(nullptr);
      j["iterate"] = o.iterate;
      if (!o.graph.empty()) {
        j["graph"] = parse_json_or_file(o.graph, "graph");
      }
      j["sweep"]     = o.sweep;
      j["max_order"] = o.max_order;
      j["towers"]    = o.towers;
      return sha256_hex(j.dump());
    }

    Json dispatch(Options const& o, std::optional<Monoid> const& M) {
      if (o.command == "analyze") {
        return analyze(*M, o);
      }
      if (o.command == "expand") {
        return expand_command(*M, o);
      }
      if (o.command == "pointlikes") {
        return pointlikes_command(*M, o);
      }
      if (o.command == "stable-pairs") {
        return stable_pairs_command(*M, o);
      }
      if (o.command == "triples") {
        return triples_command(*M, o);
      }
      if (o.command == "inevitable") {
        return inevitable_command(*M, o);
      }
      return gen_library_command(o);
    }

    void add_common(CLI::App* sub, Options& o, bool needs_monoid) {
      auto* opt = sub->add_option("--monoid", o.monoid_path, "Monoid JSON file");
      if (needs_monoid) {
        opt->required();
      }
      sub->add_option("--cap", o.cap, "Resource cap (elements, family members or submonoids)");
      sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1U, 256U));
      sub->add_option("--cache", o.cache, "Cache directory (default $APLIKE_CACHE_DIR)");
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options  o;
    CLI::App app{"Decision procedures for pointlikes, stable pairs and triples of finite monoids",
                 "aplike"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1, 1);

    auto* analyze = app.add_subcommand("analyze", "Green structure and structural predicates");
    add_common(analyze, o, true);
    analyze->add_option("--dot", o.dot, "Write the eggbox diagram as DOT");

    auto* expand = app.add_subcommand("expand", "Cut expansion, optionally iterated");
    add_common(expand, o, true);
    expand->add_option("--iterate", o.iterate, "Number of expansion steps");
    expand->add_option("--dot", o.dot, "Write the Cayley graph of the expansion as DOT");

    auto* pointlikes = app.add_subcommand("pointlikes", "Aperiodic pointlike sets");
    add_common(pointlikes, o, true);
    pointlikes->add_flag("--maximal", o.maximal, "Only the maximal pointlikes");
    pointlikes->add_flag("--idempotent", o.idempotent, "Maximal idempotent pointlikes");

    auto* stable = app.add_subcommand("stable-pairs", "M- and A-stable pairs");
    add_common(stable, o, true);
    stable->add_option("--variety", o.variety, "A or M");
    stable->add_option("--decide", o.decide, "Pair to decide: Y N, or {\"Y\":..,\"N\":..}")
        ->expected(1, 2)
        ->allow_extra_args(false);
    stable->add_flag("--maximal", o.maximal, "Enumerate the maximal pairs");

    auto* triples = app.add_subcommand("triples", "A-triples");
    add_common(triples, o, true);
    triples->add_option("--decide", o.decide, "Triple to decide: A B C, or {\"A\":..,...}")
        ->expected(1, 3)
        ->allow_extra_args(false);
    triples->add_flag("--maximal", o.maximal, "Enumerate the maximal triples");

    auto* inevitable = app.add_subcommand("inevitable", "Check a labelled graph against witnesses");
    add_common(inevitable, o, true);
    inevitable->add_option("--graph", o.graph, "Graph JSON (inline or file)")->required();
    inevitable->add_flag("--sweep", o.sweep, "Sweep the witness library");
    inevitable->add_option("--variety", o.variety, "A (aperiodic targets) or M (all targets)");
    inevitable->add_option("--max-order", o.max_order, "Largest exhaustive library order");
    inevitable->add_option("--towers", o.towers, "Expansion tower depth for witnesses");

    auto* library = app.add_subcommand("gen-library", "Write the witness library to a directory");
    library->add_option("--out", o.out_dir, "Output directory")->required();
    library->add_option("--max-order", o.max_order, "Largest exhaustive library order");
    library->add_option("--variety", o.variety, "A (aperiodic) or M (all monoids)");
    library->add_option("--threads", o.threads, "Accepted for uniformity");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      auto const code = app.exit(e, out, err);
      return code == 0 ? ExitCode::computed : ExitCode::input_error;
    }
    o.command = app.get_subcommands().front()->get_name();

    auto const start = std::chrono::steady_clock::now();
    try {
      std::optional<Monoid> M;
      if (!o.monoid_path.empty()) {
        M.emplace(load_monoid(o.monoid_path));
      }
      Json report;
      report["command"]    = o.command;
      report["version"]    = version();
      report["input_hash"] = hash_input(o, M);
      report["result"]     = dispatch(o, M);
      auto const elapsed   = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
      report["wall_time_ms"] = std::round(elapsed * 1000.0) / 1000.0;
      out << report.dump(2) << '\n';
      return ExitCode::computed;
    } catch (Error const& e) {
      err << "aplike " << o.command << ": " << e.what() << '\n';
      return e.code() == ErrorCode::SizeLimitExceeded ? ExitCode::cap_hit : ExitCode::input_error;
    } catch (std::exception const& e) {
      err << "aplike " << o.command << ": " << e.what() << '\n';
      return ExitCode::input_error;
    }
  }

}  // namespace aplike::cli
