#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "deckwork/certify.hpp"
#include "deckwork/error.hpp"
#include "deckwork/graph6.hpp"
#include "deckwork/recon.hpp"
#include "deckwork/sequence_io.hpp"
#include "deckwork/verify.hpp"

namespace deckwork::cli {

using Json = nlohmann::ordered_json;

namespace {

// Bytes per transposition-table entry, roughly: key, mpz and node overhead.
constexpr std::size_t kTableEntryBytes = 64;
// all-sequences families beyond this are refused.
constexpr std::size_t kMaxAllSequences = 5000;

int worker_count(int jobs) {
  if (jobs > 0) return jobs;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

Json big(const BigInt& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json tokens(std::span<const Graph> graphs) {
  Json a = Json::array();
  for (const Graph& g : graphs) a.push_back(encode_token(g));
  return a;
}

std::vector<Graph> parse_token_list(const std::string& text) {
  return parse_sequence(text).items();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return kExitUsage;
    case ErrorCode::kMalformedInput: return kExitMalformed;
    case ErrorCode::kBudgetExceeded: return kExitBudget;
    case ErrorCode::kIo: return kExitIo;
    case ErrorCode::kVerificationFailed: return kExitVerificationFailed;
    case ErrorCode::kInternal: return kExitInternal;
  }
  return kExitInternal;
}

// The class a command works on: all graphs of (kind, n, predicate), or the
// explicit --members list.
struct ClassData {
  ClassSpec spec;
  std::string description;
  std::vector<Graph> members;
  ReconPartition partition;
};

ClassData load_class(const RunConfig& c, int jobs) {
  ClassData data;
  data.spec = {c.kind, c.n, c.predicate};
  if (!c.members.empty()) {
    std::map<CanonicalKey, Graph> unique;
    for (const Graph& g : parse_token_list(c.members)) {
      Graph canon = canonical_form(g);
      if (!unique.emplace(canonical_key(canon), canon).second)
        throw Error(ErrorCode::kInvalidArgument, "--members lists isomorphic graphs twice");
    }
    if (unique.empty()) throw Error(ErrorCode::kInvalidArgument, "--members is empty");
    for (auto& [k, g] : unique) data.members.push_back(g);
    data.spec.kind = data.members.front().kind();
    data.spec.n = data.members.front().order();
    for (const Graph& g : data.members)
      if (g.order() != data.spec.n) throw Error(ErrorCode::kInvalidArgument, "--members mixes vertex counts");
    data.description = describe(data.spec) + " restricted to " + std::to_string(data.members.size()) + " graphs";
  } else {
    data.members = enumerate_classes(data.spec, {c.slow, jobs});
    data.description = describe(data.spec);
  }
  if (data.spec.n >= 1) data.partition = partition_by_deck(data.members, jobs);
  return data;
}

Family load_family(const RunConfig& c, const ClassData& cls, int jobs) {
  if (c.family_path) {
    Family family(FamilySource::kFile);
    for (auto& s : read_sequence_file(*c.family_path)) {
      for (const Graph& g : s.items())
        if (g.kind() != cls.spec.kind)
          throw Error(ErrorCode::kMalformedInput, "family file mixes graph kinds with the class");
      family.add(std::move(s));
    }
    return family;
  }
  if (c.family_source == "search") {
    SearchBudget budget;
    if (c.max_length > 0) budget.max_sequence_length = c.max_length;
    budget.shuffle = c.shuffle;
    return search_full_rank(cls.members, budget, c.seed, jobs).family;
  }
  if (c.family_source == "all") return all_sequences_family(cls.spec.kind, cls.spec.n, kMaxAllSequences);
  Family family(FamilySource::kDeckSequences);
  for (const Graph& g : cls.members) family.add(deck_sequence(g));
  return family;
}

Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json values = Json::array();
    for (const BigInt& x : m.row(r)) values.push_back(big(x));
    rows.push_back({{"sequence", m.row_labels().at(r)}, {"values", values}});
  }
  Json cols = Json::array();
  for (const CanonicalKey& k : m.col_labels()) cols.push_back(encode_token(key_graph(k)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"columns", cols}, {"matrix", rows}};
}

Json grid_json(const GridReport& r) {
  return {{"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}, {"failure_samples", r.failure_samples}};
}

void write_file(const std::string& path, const std::string& text, const char* flag) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, std::string(flag) + ": cannot open " + path);
  f << text;
  if (!f) throw Error(ErrorCode::kIo, std::string(flag) + ": write failed for " + path);
}

void emit(const RunConfig& c, Json report, std::ostream& out, std::chrono::steady_clock::time_point start) {
  if (c.timings) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["elapsed_ms"] = ms;
  }
  if (c.format == OutputFormat::kText)
    out << report.dump(2) << '\n';
  else
    out << report.dump() << '\n';
}

int cmd_enum(const RunConfig& c, int jobs, std::ostream& out, std::chrono::steady_clock::time_point t0) {
  ClassData cls = load_class(c, jobs);
  if (c.format == OutputFormat::kText) {
    for (const Graph& g : cls.members) out << encode_token(g) << '\n';
    return kExitOk;
  }
  emit(c, {{"class", cls.description}, {"count", cls.members.size()}, {"graphs", tokens(cls.members)}}, out, t0);
  return kExitOk;
}

int cmd_decks(const RunConfig& c, int jobs, std::ostream& out, std::chrono::steady_clock::time_point t0) {
  ClassData cls = load_class(c, jobs);
  if (cls.spec.n < 1) throw Error(ErrorCode::kInvalidArgument, "--n: decks need at least one vertex");
  Json graphs = Json::array();
  for (const Graph& g : cls.members) {
    std::vector<Graph> cards;
    for (const CanonicalKey& k : deck(g).cards) cards.push_back(key_graph(k));
    if (c.format == OutputFormat::kText) {
      out << encode_token(g) << '\t';
      for (std::size_t i = 0; i < cards.size(); ++i) out << (i ? " " : "") << encode_token(cards[i]);
      out << '\n';
    } else {
      graphs.push_back({{"graph", encode_token(g)}, {"deck", tokens(cards)}});
    }
  }
  if (c.format == OutputFormat::kJson) emit(c, {{"class", cls.description}, {"graphs", graphs}}, out, t0);
  return kExitOk;
}

int cmd_census(const RunConfig& c, int jobs, std::ostream& out, std::chrono::steady_clock::time_point t0) {
  Census result;
  if (c.members.empty()) {
    result = census({c.kind, c.n, c.predicate}, {c.slow, jobs});
  } else {
    ClassData cls = load_class(c, jobs);
    result = census_of(cls.partition, cls.spec.n);
  }
  if (c.format == OutputFormat::kText) {
    out << "psi=" << result.psi << " d=" << result.d << " alpha=" << result.alpha << '\n';
    return kExitOk;
  }
  Json report = {{"psi", result.psi}, {"d", result.d}, {"alpha", result.alpha}};
  if (!result.applicable) report["note"] = "reconstruction is only posed for n >= 3";
  emit(c, report, out, t0);
  return kExitOk;
}

int cmd_count(const RunConfig& c, std::ostream& out, std::chrono::steady_clock::time_point t0) {
  const Graph g = decode_token(c.g);
  Json report;
  BigCount value;
  if (c.subcommand == "s") {
    const Graph h = decode_token(c.h);
    value = subgraph_count(h, g);
    report = {{"h", encode_token(h)}, {"g", encode_token(g)}, {"s", big(value)}};
  } else {
    const GraphSequence seq = parse_sequence(c.sequence);
    report = {{"sequence", format_sequence(seq)}, {"g", encode_token(g)}};
    if (c.subcommand == "c") {
      value = cover_count(seq, g);
      report["c"] = big(value);
    } else if (c.subcommand == "cstar") {
      value = nonoverlapping_cover_count(seq, g);
      report["cstar"] = big(value);
    } else {
      const auto reps = enumerate_classes({g.kind(), g.order(), c.predicate}, {c.slow, 1});
      value = kocay_sum(seq, g, reps);
      report["class"] = describe({g.kind(), g.order(), c.predicate});
      report["kocay_sum"] = big(value);
    }
  }
  if (c.format == OutputFormat::kText)
    out << value.get_str() << '\n';
  else
    emit(c, report, out, t0);
  return kExitOk;
}

int cmd_matrix(const RunConfig& c, int jobs, std::ostream& out, std::chrono::steady_clock::time_point t0) {
  ClassData cls = load_class(c, jobs);
  Family family = load_family(c, cls, jobs);
  ExactMatrix m = build_matrix(family, cls.members, jobs);
  switch (c.format) {
    case OutputFormat::kCsv: out << to_csv(m); break;
    case OutputFormat::kText: out << to_text(m); break;
    case OutputFormat::kJson: {
      Json report = {{"class", cls.description}, {"family_source", to_string(family.source())}};
      report.update(matrix_json(m));
      emit(c, report, out, t0);
      break;
    }
  }
  return kExitOk;
}

int cmd_rank(const RunConfig& c, int jobs, std::ostream& out, std::chrono::steady_clock::time_point t0) {
  ClassData cls = load_class(c, jobs);
  Family family = load_family(c, cls, jobs);
  ExactMatrix m = build_matrix(family, cls.members, jobs);
  const std::size_t r = rank(m);
  emit(c,
       {{"class", cls.description},
        {"family_source", to_string(family.source())},
        {"rows", m.rows()},
        {"cols", m.cols()},
        {"rank", r},
        {"graphs", cls.members.size()},
        {"classes", cls.partition.classes.size()},
        {"full_rank", r == cls.members.size()}},
       out, t0);
  return kExitOk;
}

Json k_json(const KMatrix& k, const ReconPartition& p) {
  Json order = Json::array();
  for (std::size_t i : k.class_order) order.push_back(encode_token(p.classes[i].members.front()));
  return {{"order", order},
          {"rank", k.rank},
          {"upper_triangular", k.upper_triangular},
          {"positive_diagonal", k.positive_diagonal}};
}

int cmd_certify(const RunConfig& c, int jobs, std::ostream& out, std::chrono::steady_clock::time_point t0) {
  ClassData cls = load_class(c, jobs);
  if (cls.spec.n < 1) throw Error(ErrorCode::kInvalidArgument, "--n: certify needs at least one vertex");
  Json family_json;
  Family family;
  std::size_t best = 0;
  if (c.family_path) {
    family = load_family(c, cls, jobs);
    best = rank(build_matrix(family, cls.members, jobs));
    family_json = {{"source", to_string(family.source())}, {"size", family.size()}};
  } else {
    SearchBudget budget;
    if (c.max_length > 0) budget.max_sequence_length = c.max_length;
    budget.shuffle = c.shuffle;
    SearchResult s = search_full_rank(cls.members, budget, c.seed, jobs);
    family = s.family;
    best = s.best_rank;
    family_json = {{"source", to_string(family.source())},
                   {"size", family.size()},
                   {"pool", s.pool_size},
                   {"candidates_tried", s.candidates_tried},
                   {"rank_trace", s.rank_trace}};
  }
  Json labels = Json::array();
  for (const auto& s : family.sequences()) labels.push_back(sequence_label(s));
  family_json["sequences"] = labels;

  KMatrix k = build_K(cls.partition, default_reps_choice(cls.partition), jobs);
  if (c.csv_m) write_file(*c.csv_m, to_csv(build_matrix(family, cls.members, jobs)), "--csv-m");
  if (c.csv_k) write_file(*c.csv_k, to_csv(k.matrix), "--csv-k");

  const bool certificate = best == cls.members.size();
  emit(c,
       {{"class", cls.description},
        {"graphs", cls.members.size()},
        {"classes", cls.partition.classes.size()},
        {"seed", c.seed},
        {"family", family_json},
        {"rank", best},
        {"certificate", certificate},
        {"K", k_json(k, cls.partition)}},
       out, t0);
  return certificate ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const RunConfig& c, int jobs, std::ostream& out, std::chrono::steady_clock::time_point t0) {
  Json report = {{"check", c.subcommand}};
  bool passed = false;
  if (c.subcommand == "eq1" || c.subcommand == "recurrence") {
    report["kind"] = to_string(c.kind);
    report["n"] = c.n;
    report["mode"] = c.exhaustive ? "exhaustive" : "random";
    GridReport r;
    if (c.subcommand == "eq1") {
      const int len = c.max_length > 0 ? c.max_length : (c.kind == GraphKind::kDirected ? 2 : 3);
      report["max_length"] = len;
      if (c.exhaustive) {
        const auto pool =
            c.kind == GraphKind::kDirected ? small_directed_pool(2) : small_undirected_pool();
        report["pool"] = tokens(pool);
        r = verify_eq1_grid(c.kind, 0, c.n, pool, len, jobs);
      } else {
        report["seed"] = c.seed;
        r = verify_eq1_random(c.kind, c.n, len, c.trials, c.seed, jobs);
      }
    } else {
      if (c.exhaustive) {
        const int len = c.max_length > 0 ? c.max_length : std::min(3, c.n);
        report["max_length"] = len;
        r = verify_recurrence_grid(c.kind, c.n, 2, len, jobs);
      } else {
        const int len = c.max_length > 0 ? c.max_length : c.n;
        report["max_length"] = len;
        report["seed"] = c.seed;
        r = verify_recurrence_random(c.kind, c.n, len, c.trials, c.seed, jobs);
      }
    }
    report.update(grid_json(r));
    passed = r.passed();
  } else {
    ClassData cls = load_class(c, jobs);
    if (cls.spec.n < 1) throw Error(ErrorCode::kInvalidArgument, "--n: needs at least one vertex");
    report["class"] = cls.description;
    report["graphs"] = cls.members.size();
    report["classes"] = cls.partition.classes.size();
    if (c.subcommand == "theorem1") {
      Theorem1Options opt;
      opt.trials = c.trials;
      opt.seed = c.seed;
      opt.jobs = jobs;
      if (c.max_length > 0) opt.family.max_sequence_length = c.max_length;
      Theorem1Report r = verify_theorem1(cls.members, cls.partition, opt);
      report.update(Json{{"seed", c.seed},
                         {"trials", r.trials},
                         {"sequences", r.sequences},
                         {"max_rank", r.max_rank},
                         {"rank_violations", r.rank_violations},
                         {"kocay_checks", r.kocay_checks},
                         {"kocay_violations", r.kocay_violations},
                         {"witnesses", r.witnesses},
                         {"witness_checks", r.witness_checks},
                         {"witness_violations", r.witness_violations},
                         {"passed", r.passed()}});
      passed = r.passed();
    } else if (c.subcommand == "theorem2") {
      Theorem2Options opt;
      opt.jobs = jobs;
      Theorem2Report r = verify_theorem2(cls.partition, default_reps_choice(cls.partition), opt);
      report.update(Json{{"family_size", r.family_size},
                         {"K", k_json(r.k, cls.partition)},
                         {"rank_m", r.rank_m},
                         {"rank_m_star", r.rank_m_star},
                         {"rank_stacked", r.rank_stacked},
                         {"passed", r.passed()}});
      passed = r.passed();
    } else {
      GridReport r = verify_kelly(cls.partition, cls.spec.kind, cls.spec.n);
      report.update(grid_json(r));
      passed = r.passed();
    }
  }
  emit(c, report, out, t0);
  return passed ? kExitOk : kExitVerificationFailed;
}

int cmd_legit_deck(const RunConfig& c, int jobs, std::ostream& out, std::chrono::steady_clock::time_point t0) {
  const std::vector<Graph> cards = parse_token_list(c.cards);
  if (cards.empty()) throw Error(ErrorCode::kInvalidArgument, "--cards is empty");
  const ClassSpec spec{cards.front().kind(), static_cast<int>(cards.size()), c.predicate};
  auto witness = legitimate_deck_witness(cards, spec, {c.slow, jobs});
  emit(c,
       {{"class", describe(spec)},
        {"cards", cards.size()},
        {"legitimate", witness.has_value()},
        {"witness", witness ? Json(encode_token(*witness)) : Json(nullptr)}},
       out, t0);
  return kExitOk;
}

}  // namespace

void apply_environment() {
  if (const char* mb = std::getenv("DECKWORK_COVER_TABLE_MB")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(mb, &end, 10);
    if (end != mb && *end == '\0') set_cover_table_limit(static_cast<std::size_t>(v) * (std::size_t{1} << 20) / kTableEntryBytes);
  }
}

std::optional<std::string> validate(const RunConfig& c) {
  if (c.n < 0 || c.n > kMaxVertices) return "--n must be between 0 and " + std::to_string(kMaxVertices);
  if (c.jobs < 0) return std::string("--jobs must be >= 0");
  if (c.max_length < 0) return std::string("--max-length must be >= 0");
  if (c.format == OutputFormat::kCsv && c.command != "matrix")
    return std::string("--format csv is only available for matrix");
  if (c.family_path && !(c.command == "matrix" || c.command == "rank" || c.command == "certify"))
    return std::string("--family is only used by matrix, rank and certify");
  if (c.family_source != "deck" && c.family_source != "search" && c.family_source != "all")
    return std::string("--family-source must be deck, search or all");
  if (c.command == "count") {
    if (c.g.empty()) return std::string("--g is required");
    if (c.subcommand == "s" && c.h.empty()) return std::string("--pattern is required");
    if (c.subcommand != "s" && c.sequence.empty()) return std::string("--seq is required");
  }
  if (c.command == "legit-deck" && c.cards.empty()) return std::string("--cards is required");
  if (c.exhaustive && !(c.command == "verify" && (c.subcommand == "eq1" || c.subcommand == "recurrence")))
    return std::string("--exhaustive applies to verify eq1 and verify recurrence");
  if (c.command == "verify" && c.subcommand == "recurrence" && c.n < 2)
    return std::string("--n must be at least 2 for verify recurrence");
  if ((c.csv_m || c.csv_k) && c.command != "certify") return std::string("--csv-m/--csv-k belong to certify");
  return std::nullopt;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
    return code;
  };
  if (auto problem = validate(c)) return fail(kExitUsage, "invalid-argument", *problem);
  const int jobs = worker_count(c.jobs);
  try {
    if (c.command == "enum") return cmd_enum(c, jobs, out, t0);
    if (c.command == "decks") return cmd_decks(c, jobs, out, t0);
    if (c.command == "census") return cmd_census(c, jobs, out, t0);
    if (c.command == "count") return cmd_count(c, out, t0);
    if (c.command == "matrix") return cmd_matrix(c, jobs, out, t0);
    if (c.command == "rank") return cmd_rank(c, jobs, out, t0);
    if (c.command == "certify") return cmd_certify(c, jobs, out, t0);
    if (c.command == "verify") return cmd_verify(c, jobs, out, t0);
    if (c.command == "legit-deck") return cmd_legit_deck(c, jobs, out, t0);
    return fail(kExitUsage, "invalid-argument", "unknown command '" + c.command + "'");
  } catch (const Error& e) {
    return fail(exit_code_for(e.code()), to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(kExitInternal, "internal", e.what());
  }
}

std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                              std::ostream& err) {
  CLI::App app{"deckwork: graph reconstruction workbench"};
  app.require_subcommand(1);

  const std::map<std::string, GraphKind> kinds{{"graph", GraphKind::kUndirected},
                                               {"digraph", GraphKind::kDirected}};
  const std::map<std::string, Predicate> predicates{{"all", Predicate::kAll}, {"connected", Predicate::kConnected}};
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::kJson}, {"csv", OutputFormat::kCsv}, {"text", OutputFormat::kText}};

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--kind", config.kind, "graph or digraph")->transform(CLI::CheckedTransformer(kinds));
    cmd->add_option("--n", config.n, "number of vertices");
    cmd->add_option("--predicate", config.predicate, "all or connected")
        ->transform(CLI::CheckedTransformer(predicates));
    cmd->add_option("--members", config.members, "comma-separated tokens; restricts the class");
    cmd->add_option("--format", config.format, "json, csv or text")->transform(CLI::CheckedTransformer(formats));
    cmd->add_option("--seed", config.seed, "random seed");
    cmd->add_option("--jobs", config.jobs, "worker threads (0: all cores)");
    cmd->add_flag("--slow", config.slow, "allow undirected n=7 and directed n=5 enumeration");
    cmd->add_flag("--timings", config.timings, "add elapsed_ms to JSON reports");
  };
  auto with_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", config.family_path, "file of sequences, one per line");
    cmd->add_option("--family-source", config.family_source, "deck, search or all (without --family)");
    cmd->add_option("--max-length", config.max_length, "longest candidate sequence");
    cmd->add_flag("--shuffle", config.shuffle, "seeded shuffle of search candidates");
  };

  std::vector<std::pair<CLI::App*, std::string>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    common(cmd);
    leaves.emplace_back(cmd, name);
    return cmd;
  };

  leaf(&app, "enum", "list isomorphism classes");
  leaf(&app, "decks", "print the deck of every class");
  leaf(&app, "census", "psi, d and alpha for the class");
  CLI::App* count = app.add_subcommand("count", "subgraph and cover counts");
  count->require_subcommand(1);
  for (const char* name : {"s", "c", "cstar", "kocay-sum"}) {
    CLI::App* cmd = leaf(count, name, std::string("count ") + name);
    cmd->add_option("--g", config.g, "host graph token");
    if (std::string(name) == "s")
      cmd->add_option("--pattern", config.h, "pattern graph token");
    else
      cmd->add_option("--seq", config.sequence, "comma-separated sequence tokens");
  }
  with_family(leaf(&app, "matrix", "cover-count matrix of a family"));
  with_family(leaf(&app, "rank", "exact rank of the cover-count matrix"));
  CLI::App* certify = leaf(&app, "certify", "search for a full-rank family and build K");
  with_family(certify);
  certify->add_option("--csv-m", config.csv_m, "write the family matrix as CSV");
  certify->add_option("--csv-k", config.csv_k, "write K as CSV");
  CLI::App* verify = app.add_subcommand("verify", "property checks");
  verify->require_subcommand(1);
  for (const char* name : {"eq1", "recurrence", "theorem1", "theorem2", "kelly"}) {
    CLI::App* cmd = leaf(verify, name, std::string("verify ") + name);
    cmd->add_option("--trials", config.trials, "random cases or families");
    cmd->add_option("--max-length", config.max_length, "longest sequence");
    if (std::string(name) == "eq1" || std::string(name) == "recurrence")
      cmd->add_flag("--exhaustive", config.exhaustive, "run the exhaustive grid");
  }
  leaf(&app, "legit-deck", "is a multiset of cards the deck of some graph?")
      ->add_option("--cards", config.cards, "comma-separated card tokens");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (const auto& [cmd, name] : leaves) {
    if (!cmd->parsed()) continue;
    CLI::App* parent = cmd->get_parent();
    if (parent == &app) {
      config.command = name;
    } else {
      config.command = parent->get_name();
      config.subcommand = name;
    }
  }
  return std::nullopt;
}

}  // namespace deckwork::cli
