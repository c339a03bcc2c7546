#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "hurwitz/connect.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/oracle.hpp"

namespace {

using hurwitz::BraidWord;
using hurwitz::ClassLabeling;
using hurwitz::CoxeterWord;
using hurwitz::Factorization;
using hurwitz::RootSpace;
using json = nlohmann::json;

// exit codes: 0 success/equivalent, 1 not-equivalent/mismatch,
// 2 invalid input, 3 internal assertion failure
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInvalid = 2;
constexpr int kInternal = 3;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    hurwitz::fail(hurwitz::ErrorCode::InvalidArgument, "cannot open file", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json read_json(const std::string& path) {
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_discarded())
    hurwitz::fail(hurwitz::ErrorCode::SyntaxError, "file is not valid JSON", path);
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_permutation(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  int v;
  while (in >> v) out.push_back(v);
  if (!in.eof())
    hurwitz::fail(hurwitz::ErrorCode::InvalidArgument,
                  "permutation must be space-separated integers");
  return out;
}

struct ProblemInputs {
  std::string diagram_path;
  std::string coxeter;
  std::string f_path;
  std::string g_path;
};

struct Problem {
  std::unique_ptr<RootSpace> space;
  ClassLabeling labeling;
  CoxeterWord cw;
  Factorization f, g;
};

Problem load_problem(const ProblemInputs& in) {
  auto space = std::make_unique<RootSpace>(
      hurwitz::diagram_from_text(read_file(in.diagram_path)));
  ClassLabeling labeling = odd_components(space->diagram());
  CoxeterWord cw = coxeter_word(space->diagram(), parse_permutation(in.coxeter));
  Factorization f = factorization_from_json(*space, read_json(in.f_path));
  Factorization g = factorization_from_json(*space, read_json(in.g_path));
  validate_coxeter_target(*space, cw, f);
  validate_coxeter_target(*space, cw, g);
  return Problem{std::move(space), std::move(labeling), std::move(cw),
                 std::move(f), std::move(g)};
}

int run_selftest() {
  struct System {
    const char* name;
    const char* dsl;
    std::size_t order;
    std::size_t reflections;
    std::size_t reduced_orbit;  // count of reduced factorizations of s_1 s_2 ...
  };
  const System systems[] = {
      {"A2", "rank 2\nm 1 2 3", 6, 3, 3},
      {"B2", "rank 2\nm 1 2 4", 8, 4, 4},
      {"A1xA1", "rank 2\nm 1 2 2", 4, 2, 2},
      {"I2(5)", "rank 2\nm 1 2 5", 10, 5, 5},
      {"I2(6)", "rank 2\nm 1 2 6", 12, 6, 6},
      {"A3", "rank 3\nm 1 2 3\nm 2 3 3", 24, 6, 16},
  };
  json report = json::array();
  bool ok = true;
  for (const auto& sys : systems) {
    RootSpace space(hurwitz::parse_diagram(sys.dsl));
    ClassLabeling labeling = odd_components(space.diagram());
    auto table = enumerate_group(space, 4 * sys.order);
    bool sizes = table.elements.size() == sys.order &&
                 table.reflections.size() == sys.reflections;

    // labeling agrees with brute-force conjugacy
    auto classes = brute_conjugacy(table);
    bool conjugacy = true;
    for (const auto& cls : classes) {
      for (const auto& t : cls)
        conjugacy &= space.class_of(t, labeling) ==
                     space.class_of(cls.front(), labeling);
    }
    std::size_t labeled_count = 0;
    for (const auto& t : table.reflections) {
      (void)t;
      ++labeled_count;
    }
    conjugacy &= classes.size() == static_cast<std::size_t>(labeling.class_count);

    // greedy length agrees with word-graph BFS distance
    std::vector<int> dist(table.elements.size(), -1);
    std::vector<int> queue{0};
    dist[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int at = queue[head];
      for (int i = 1; i <= space.rank(); ++i) {
        int next = table.index(table.elements[at] * space.simple_reflection(i));
        if (dist[next] < 0) {
          dist[next] = dist[at] + 1;
          queue.push_back(next);
        }
      }
    }
    bool lengths = true;
    for (std::size_t e = 0; e < table.elements.size(); ++e)
      lengths &= space.length(table.elements[e]) == dist[e];

    // reduced factorizations of the standard Coxeter element form one orbit
    std::vector<int> perm(space.rank());
    for (int i = 0; i < space.rank(); ++i) perm[i] = i + 1;
    auto reduced = all_factorizations(
        table, space.element_of_word(coxeter_word(space.diagram(), perm).letters),
        space.rank());
    auto orbits = orbit_partition(reduced);
    bool transitive =
        reduced.size() == sys.reduced_orbit && orbits.size() == 1;

    bool system_ok = sizes && conjugacy && lengths && transitive;
    ok &= system_ok;
    report.push_back(json{{"system", sys.name},
                          {"order", table.elements.size()},
                          {"reflections", table.reflections.size()},
                          {"classes", classes.size()},
                          {"conjugacy_agrees", conjugacy},
                          {"length_agrees", lengths},
                          {"reduced_factorizations", reduced.size()},
                          {"reduced_single_orbit", orbits.size() == 1},
                          {"ok", system_ok}});
  }
  emit(json{{"ok", ok}, {"systems", report}});
  return ok ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hurwitz action on reflection factorizations of Coxeter elements:\n"
      "decide equivalence by class multisets and construct braid witnesses."};
  app.require_subcommand(1);

  ProblemInputs in;
  std::string braid_path, expect_path;
  std::size_t cap = 100000;
  int threads = 1;
  bool dump_states = false;

  auto* classes_cmd =
      app.add_subcommand("classes", "Conjugacy classes of the simple reflections");
  classes_cmd->add_option("--diagram", in.diagram_path, "Diagram file (DSL or JSON)")
      ->required();

  auto* decide_cmd = app.add_subcommand(
      "decide", "Compare class multisets; exit 0 iff Hurwitz-equivalent");
  auto* connect_cmd = app.add_subcommand(
      "connect", "Decide and, when equivalent, emit a verified braid witness");
  for (auto* cmd : {decide_cmd, connect_cmd}) {
    cmd->add_option("--diagram", in.diagram_path, "Diagram file (DSL or JSON)")
        ->required();
    cmd->add_option("--coxeter", in.coxeter,
                    "Coxeter element as a permutation, e.g. \"1 2 3\"")
        ->required();
    cmd->add_option("--f", in.f_path, "First factorization (JSON)")->required();
    cmd->add_option("--g", in.g_path, "Second factorization (JSON)")->required();
  }

  auto* normalize_cmd = app.add_subcommand(
      "normalize", "Rewrite into a strictly increasing core plus trailing pairs");
  normalize_cmd->add_option("--diagram", in.diagram_path, "Diagram file")->required();
  normalize_cmd->add_option("--f", in.f_path, "Factorization (JSON)")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "Breadth-first Hurwitz orbit closure");
  orbit_cmd->add_option("--diagram", in.diagram_path, "Diagram file")->required();
  orbit_cmd->add_option("--f", in.f_path, "Factorization (JSON)")->required();
  orbit_cmd->add_option("--cap", cap, "Bound on visited states");
  orbit_cmd->add_option("--threads", threads, "Worker threads for the search");
  orbit_cmd->add_flag("--dump", dump_states, "Include the visited states");

  auto* verify_cmd = app.add_subcommand(
      "verify", "Replay a braid on a factorization and compare with --expect");
  verify_cmd->add_option("--diagram", in.diagram_path, "Diagram file")->required();
  verify_cmd->add_option("--f", in.f_path, "Factorization (JSON)")->required();
  verify_cmd->add_option("--braid", braid_path, "Braid word (JSON)")->required();
  verify_cmd->add_option("--expect", expect_path, "Expected factorization (JSON)")
      ->required();

  app.add_subcommand("selftest",
                     "Oracle agreement suite on the built-in desk-scale systems");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classes_cmd->parsed()) {
      RootSpace space(hurwitz::diagram_from_text(read_file(in.diagram_path)));
      emit(labeling_to_json(odd_components(space.diagram())));
      return kOk;
    }
    if (decide_cmd->parsed() || connect_cmd->parsed()) {
      Problem p = load_problem(in);
      hurwitz::Decision d =
          connect_cmd->parsed()
              ? hurwitz::connect(p.f, p.g, p.cw, p.labeling)
              : hurwitz::decide(p.f, p.g, p.labeling);
      json out{{"equivalent", d.equivalent},
               {"certificate",
                {{"f", multiset_to_json(d.certificate_f)},
                 {"g", multiset_to_json(d.certificate_g)}}}};
      if (d.witness) {
        // re-verify before printing
        hurwitz::require_internal(replay(p.f, *d.witness) == p.g,
                                  "witness failed re-verification");
        out["witness"] = hurwitz::braid_to_json(*d.witness);
      }
      emit(out);
      return d.equivalent ? kOk : kNegative;
    }
    if (normalize_cmd->parsed()) {
      RootSpace space(hurwitz::diagram_from_text(read_file(in.diagram_path)));
      Factorization f = factorization_from_json(space, read_json(in.f_path));
      hurwitz::NormalForm nf = normalize(f);
      json pairs = json::array();
      for (const auto& t : nf.pairs) pairs.push_back(space.word_of(t));
      emit(json{{"core", factorization_to_json(nf.core)},
                {"pairs", pairs},
                {"braid", hurwitz::braid_to_json(nf.braid)}});
      return kOk;
    }
    if (orbit_cmd->parsed()) {
      RootSpace space(hurwitz::diagram_from_text(read_file(in.diagram_path)));
      Factorization f = factorization_from_json(space, read_json(in.f_path));
      hurwitz::OrbitResult orbit = orbit_bfs(f, cap, threads);
      json out{{"size", orbit.states.size()}, {"truncated", orbit.truncated}};
      if (dump_states) {
        json states = json::array();
        for (const auto& s : orbit.states) states.push_back(factorization_to_json(s));
        out["states"] = states;
      }
      emit(out);
      return kOk;
    }
    if (verify_cmd->parsed()) {
      RootSpace space(hurwitz::diagram_from_text(read_file(in.diagram_path)));
      Factorization f = factorization_from_json(space, read_json(in.f_path));
      BraidWord braid = hurwitz::braid_from_json(read_json(braid_path));
      Factorization expect = factorization_from_json(space, read_json(expect_path));
      bool match = replay(f, braid) == expect;
      emit(json{{"match", match}});
      return match ? kOk : kNegative;
    }
    return run_selftest();
  } catch (const hurwitz::Error& e) {
    json err{{"code", hurwitz::error_code_name(e.code())},
             {"message", e.what()},
             {"location", e.location()}};
    std::cout << err.dump(2) << "\n";
    return e.code() == hurwitz::ErrorCode::InternalError ? kInternal : kInvalid;
  } catch (const std::exception& e) {
    json err{{"code", "InternalError"}, {"message", e.what()}, {"location", ""}};
    std::cout << err.dump(2) << "\n";
    return kInternal;
  }
}
