// Copyright 2026 The Perfograph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include "perfograph/embedding/features.hpp"
#include "perfograph/embedding/table.hpp"
#include "perfograph/errors.hpp"
#include "perfograph/io/bundle.hpp"
#include "perfograph/io/dot.hpp"
#include "perfograph/io/files.hpp"
#include "perfograph/io/json.hpp"
#include "perfograph/io/vocab.hpp"
#include "perfograph/ir/parser.hpp"
#include "perfograph/transform/passes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

namespace perfograph::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
  // transform
  bool no_unify = false;
  bool no_store_edges = false;
  bool no_numeric = false;
  bool no_aggregate = false;
  bool lenient = false;
  // embedding
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> k;
  std::string agg = "mean";
  // output
  std::string output;
  bool dot = false;
  bool json = false;
  // corpus / vocab
  bool keep_going = false;
  unsigned jobs = 0;
  std::uint64_t min_count = 1;
  std::string vocab_path;
  // inputs
  std::string input;
  std::vector<std::string> inputs;
  std::string number;
  bool full_text_labels = false;
};

struct Settings {
  transform::TransformConfig transform;
  std::uint64_t seed = embedding::kDefaultSeed;
  std::size_t k = embedding::kDefaultDim;
  embedding::Aggregation agg = embedding::Aggregation::Mean;
  ir::ParseMode mode = ir::ParseMode::Strict;

  io::BundleConfig bundle_config() const {
    return {transform, seed, k, 3 * k, agg};
  }
};

std::uint64_t env_uint(const char *name) {
  const char *v = std::getenv(name);
  std::uint64_t out = 0;
  std::istringstream ss(v);
  if (!(ss >> out) || !ss.eof())
    throw ConfigError(std::string(name) + " must be a non-negative integer, got '" +
                      v + "'");
  return out;
}

Settings resolve(const Options &o) {
  Settings s;
  s.transform.unify_identifiers = !o.no_unify;
  s.transform.store_modify_edges = !o.no_unify && !o.no_store_edges;
  s.transform.numeric_values = !o.no_numeric;
  s.transform.aggregate_chains = !o.no_aggregate;
  if (o.seed)
    s.seed = *o.seed;
  else if (std::getenv("PG_SEED"))
    s.seed = env_uint("PG_SEED");
  if (o.k)
    s.k = *o.k;
  else if (std::getenv("PG_EMBED_DIM"))
    s.k = env_uint("PG_EMBED_DIM");
  if (s.k == 0)
    throw ConfigError("embedding dimension must be positive");
  s.agg = embedding::parse_aggregation(o.agg);
  s.mode = o.lenient ? ir::ParseMode::Lenient : ir::ParseMode::Strict;
  return s;
}

void add_transform_flags(CLI::App *cmd, Options &o) {
  cmd->add_flag("--no-unify", o.no_unify,
                "Keep one node per identifier reference (implies --no-store-edges)");
  cmd->add_flag("--no-store-edges", o.no_store_edges, "Omit store-modify edges");
  cmd->add_flag("--no-numeric", o.no_numeric, "Omit numeric values and digit tokens");
  cmd->add_flag("--no-aggregate", o.no_aggregate, "Omit aggregate dimension chains");
  cmd->add_flag("--lenient", o.lenient, "Turn unsupported instructions into opaque nodes");
}

void add_embedding_flags(CLI::App *cmd, Options &o) {
  cmd->add_option("--seed", o.seed, "Table seed (env PG_SEED, default 42)");
  cmd->add_option("--k", o.k, "Embedding dimension (env PG_EMBED_DIM, default 40)");
  cmd->add_option("--agg", o.agg, "Digit aggregation")
      ->check(CLI::IsMember({"mean", "max", "sum"}));
}

std::string stem_of(const fs::path &p) {
  std::string name = p.filename().string();
  for (std::string_view ext : {".pg.json", ".ll"})
    if (name.size() > ext.size() && name.ends_with(ext))
      return name.substr(0, name.size() - ext.size());
  return p.stem().string();
}

graph::ProgramGraph build_from_ir(const std::string &text, const std::string &name,
                                  const Settings &s, std::ostream *err) {
  ir::ParseResult parsed = ir::parse_module(text, s.mode, name);
  if (err)
    for (const auto &w : parsed.diagnostics.warnings)
      *err << name << ":" << w.line << ": warning: " << w.message << "\n";
  return transform::build_perfograph(parsed.module, s.transform);
}

/// A .pg.json graph file is read as is; anything else is parsed as IR.
graph::ProgramGraph load_graph(const fs::path &path, const Settings &s,
                               std::ostream &err) {
  const std::string text = io::read_file(path);
  if (path.filename().string().ends_with(".pg.json"))
    return io::from_json(text);
  return build_from_ir(text, stem_of(path), s, &err);
}

io::Vocab load_or_build_vocab(const Options &o, const Settings &s,
                              const graph::ProgramGraph &g) {
  io::Vocab v;
  if (!o.vocab_path.empty()) {
    v = io::vocab_from_json(io::read_file(o.vocab_path));
  } else {
    v = io::vocab_from_counts(io::count_tokens(g), o.min_count);
    v.seed = s.seed;
    v.k = s.k;
  }
  return v;
}

void print_vector(std::ostream &out, const embedding::Vector &v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", static_cast<double>(v[i]));
    out << (i ? " " : "") << buf;
  }
  out << "\n";
}

// ---- commands ----

int cmd_build(const Options &o, std::ostream &out, std::ostream &err) {
  const Settings s = resolve(o);
  const fs::path in(o.input);
  const auto g = build_from_ir(io::read_file(in), stem_of(in), s, &err);
  const fs::path dir = o.output.empty() ? fs::path(".") : fs::path(o.output);
  const fs::path json_path = dir / (stem_of(in) + ".pg.json");
  io::write_file(json_path, io::to_json(g));
  out << json_path.string() << "\n";
  if (o.dot) {
    const fs::path dot_path = dir / (stem_of(in) + ".dot");
    io::write_file(dot_path, io::to_dot(g));
    out << dot_path.string() << "\n";
  }
  return kExitOk;
}

struct FileResult {
  std::string source;
  std::optional<graph::ProgramGraph> graph;
  std::string error;
  bool io_error = false;
};

int cmd_corpus(const Options &o, std::ostream &out, std::ostream &err) {
  const Settings s = resolve(o);
  const fs::path root(o.input);
  if (o.output.empty())
    throw ConfigError("corpus requires -o <dir>");
  const fs::path dest(o.output);

  std::error_code ec;
  if (!fs::is_directory(root, ec))
    throw IoError("'" + root.string() + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(root, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".ll")
      files.push_back(entry.path());
  if (ec)
    throw IoError("cannot list '" + root.string() + "': " + ec.message());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "pg: no .ll files in '" << root.string() << "'\n";
    return kExitFailure;
  }

  std::vector<FileResult> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      FileResult &r = results[i];
      r.source = files[i].filename().string();
      try {
        r.graph = build_from_ir(io::read_file(files[i]), stem_of(files[i]), s, nullptr);
      } catch (const IoError &e) {
        r.error = e.what();
        r.io_error = true;
      } catch (const Error &e) {
        r.error = e.what();
      }
    }
  };
  unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, files.size()));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  std::size_t ok = 0;
  bool any_io = false;
  for (const auto &r : results) {
    if (r.graph) {
      ++ok;
    } else {
      err << r.source << ": error: " << r.error << "\n";
      any_io = any_io || r.io_error;
    }
  }
  if (ok < results.size() && !o.keep_going) {
    err << "pg: " << results.size() - ok
        << " file(s) failed; rerun with --keep-going to skip them\n";
    return any_io ? kExitIo : kExitFailure;
  }

  io::TokenCounts counts;
  for (const auto &r : results)
    if (r.graph)
      io::merge_counts(counts, io::count_tokens(*r.graph));
  io::Vocab vocab = io::vocab_from_counts(counts, o.min_count);
  vocab.seed = s.seed;
  vocab.k = s.k;
  const std::string vocab_text = io::vocab_to_json(vocab);
  const std::string vocab_ref = io::checksum(vocab_text);
  io::write_file(dest / "vocab.json", vocab_text);

  Json manifest = Json::object();
  manifest["format_version"] = io::kFormatVersion;
  manifest["vocab"] = "vocab.json";
  manifest["vocab_ref"] = vocab_ref;
  Json entries = Json::array();
  for (const auto &r : results) {
    Json e = Json::object();
    e["source"] = r.source;
    if (!r.graph) {
      e["status"] = "error";
      e["error"] = r.error;
      entries.push_back(std::move(e));
      continue;
    }
    const std::string stem = stem_of(r.source);
    const std::string graph_file = "graphs/" + stem + ".pg.json";
    const std::string bundle_dir = "bundles/" + stem;
    io::write_file(dest / graph_file, io::to_json(*r.graph));
    io::BundleMeta meta{r.graph->module_name(), r.source, s.bundle_config(), vocab_ref};
    io::write_bundle(io::to_hetero_bundle(*r.graph, vocab, meta), dest / bundle_dir);
    e["status"] = "ok";
    e["graph"] = graph_file;
    e["bundle"] = bundle_dir;
    e["nodes"] = r.graph->node_count();
    e["edges"] = r.graph->edge_count();
    entries.push_back(std::move(e));
  }
  manifest["files"] = std::move(entries);
  manifest["ok"] = ok;
  manifest["failed"] = results.size() - ok;
  io::write_file(dest / "manifest.json", manifest.dump(2) + "\n");

  out << ok << " ok, " << results.size() - ok << " failed\n";
  return ok == 0 ? kExitFailure : kExitOk;
}

int cmd_stats(const Options &o, std::ostream &out, std::ostream &err) {
  const Settings s = resolve(o);
  const auto g = load_graph(o.input, s, err);
  const auto st = graph::stats(g);
  if (o.json) {
    Json j = Json::object();
    j["module_name"] = g.module_name();
    Json nodes = Json::object();
    for (auto k : graph::kAllNodeKinds)
      nodes[std::string(graph::to_string(k))] = st.count(k);
    Json edges = Json::object();
    for (auto k : graph::kAllEdgeKinds)
      edges[std::string(graph::to_string(k))] = st.count(k);
    j["nodes"] = std::move(nodes);
    j["edges"] = std::move(edges);
    j["total_nodes"] = g.node_count();
    j["total_edges"] = g.edge_count();
    j["max_degree"] = st.max_degree;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "module " << g.module_name() << "\n";
  for (auto k : graph::kAllNodeKinds)
    out << "  node " << std::left << std::setw(14) << graph::to_string(k) << st.count(k)
        << "\n";
  for (auto k : graph::kAllEdgeKinds)
    out << "  edge " << std::left << std::setw(14) << graph::to_string(k) << st.count(k)
        << "\n";
  out << "  total nodes   " << g.node_count() << "\n"
      << "  total edges   " << g.edge_count() << "\n"
      << "  max degree    " << st.max_degree << "\n";
  return kExitOk;
}

int cmd_embed(const Options &o, std::ostream &out, std::ostream &) {
  const Settings s = resolve(o);
  const embedding::EmbeddingTable table(s.seed, s.k);
  const auto tokens = embedding::tokenize_numeric(o.number);
  const auto v = embedding::aggregate(embedding::embed_digits(tokens, table), s.agg);
  if (o.json) {
    Json j = Json::object();
    j["literal"] = o.number;
    j["seed"] = s.seed;
    j["k"] = s.k;
    j["aggregation"] = embedding::to_string(s.agg);
    Json seq = Json::array();
    for (const auto &t : tokens)
      seq.push_back(Json::array({std::string(1, t.symbol), t.position}));
    j["digit_tokens"] = std::move(seq);
    j["vector"] = v;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  print_vector(out, v);
  return kExitOk;
}

int cmd_vocab(const Options &o, std::ostream &out, std::ostream &err) {
  const Settings s = resolve(o);
  io::TokenCounts counts;
  for (const auto &p : o.inputs)
    io::merge_counts(counts, io::count_tokens(load_graph(p, s, err)));
  io::Vocab v = io::vocab_from_counts(counts, o.min_count);
  v.seed = s.seed;
  v.k = s.k;
  const std::string text = io::vocab_to_json(v);
  if (o.output.empty())
    out << text;
  else
    io::write_file(o.output, text);
  return kExitOk;
}

int cmd_bundle(const Options &o, std::ostream &out, std::ostream &err) {
  const Settings s = resolve(o);
  if (o.output.empty())
    throw ConfigError("bundle requires -o <dir>");
  const auto g = load_graph(o.input, s, err);
  io::Vocab vocab = load_or_build_vocab(o, s, g);
  std::string vocab_ref;
  if (!o.vocab_path.empty()) {
    vocab_ref = io::checksum(io::read_file(o.vocab_path));
  } else {
    const std::string text = io::vocab_to_json(vocab);
    vocab_ref = io::checksum(text);
    io::write_file(fs::path(o.output) / "vocab.json", text);
  }
  io::BundleConfig config = s.bundle_config();
  config.seed = vocab.seed;
  config.k = vocab.k;
  config.out_dim = 3 * vocab.k;
  io::BundleMeta meta{g.module_name(), fs::path(o.input).filename().string(), config,
                      vocab_ref};
  const auto b = io::to_hetero_bundle(g, vocab, meta);
  io::write_bundle(b, o.output);
  out << b.node_count() << " nodes, " << b.edge_tables.size() << " relations\n";
  return kExitOk;
}

int cmd_features(const Options &o, std::ostream &out, std::ostream &err) {
  const Settings s = resolve(o);
  const auto g = load_graph(o.input, s, err);
  const io::Vocab vocab = load_or_build_vocab(o, s, g);
  const embedding::EmbeddingTable table(vocab.seed, vocab.k, vocab.tokens());
  const auto m = embedding::graph_features(g, table, s.agg, 3 * vocab.k);
  if (o.json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
      const auto r = m.row(i);
      rows.push_back(std::vector<float>(r.begin(), r.end()));
    }
    Json j = Json::object();
    j["seed"] = vocab.seed;
    j["k"] = vocab.k;
    j["out_dim"] = m.cols;
    j["features"] = std::move(rows);
    out << j.dump() << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < m.rows; ++i) {
    const auto r = m.row(i);
    print_vector(out, embedding::Vector(r.begin(), r.end()));
  }
  return kExitOk;
}

int cmd_dot(const Options &o, std::ostream &out, std::ostream &err) {
  const Settings s = resolve(o);
  const auto g = load_graph(o.input, s, err);
  const std::string text = io::to_dot(g, {o.full_text_labels});
  if (o.output.empty())
    out << text;
  else
    io::write_file(o.output, text);
  return kExitOk;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Build program graphs from textual LLVM IR", "pg"};
  app.require_subcommand(1);

  auto *build = app.add_subcommand("build", "Build the graph of one .ll file");
  build->add_option("input", o.input, "Input .ll file")->required();
  build->add_option("-o,--output", o.output, "Output directory");
  build->add_flag("--dot", o.dot, "Also write a .dot file");
  add_transform_flags(build, o);

  auto *corpus = app.add_subcommand("corpus", "Process a directory of .ll files");
  corpus->add_option("dir", o.input, "Input directory")->required();
  corpus->add_option("-o,--output", o.output, "Output directory")->required();
  corpus->add_flag("--keep-going", o.keep_going, "Record failures and continue");
  corpus->add_option("--jobs", o.jobs, "Worker threads (default: logical CPUs)");
  corpus->add_option("--min-count", o.min_count, "Vocabulary frequency threshold");
  add_transform_flags(corpus, o);
  add_embedding_flags(corpus, o);

  auto *stats = app.add_subcommand("stats", "Print node and edge counts");
  stats->add_option("input", o.input, "Graph (.pg.json) or IR (.ll) file")->required();
  stats->add_flag("--json", o.json, "Machine-readable output");
  add_transform_flags(stats, o);

  auto *embed = app.add_subcommand("embed", "Print the digit embedding of a number");
  embed->add_option("--number", o.number, "Numeric literal")->required();
  embed->add_flag("--json", o.json, "Machine-readable output");
  add_embedding_flags(embed, o);

  auto *vocab = app.add_subcommand("vocab", "Build a vocabulary over graphs");
  vocab->add_option("inputs", o.inputs, "Graph or IR files")->required();
  vocab->add_option("-o,--output", o.output, "Output file (default: stdout)");
  vocab->add_option("--min-count", o.min_count, "Frequency threshold");
  add_transform_flags(vocab, o);
  add_embedding_flags(vocab, o);

  auto *bundle = app.add_subcommand("bundle", "Write the heterogeneous bundle of a graph");
  bundle->add_option("input", o.input, "Graph or IR file")->required();
  bundle->add_option("-o,--output", o.output, "Output directory")->required();
  bundle->add_option("--vocab", o.vocab_path, "Existing vocab.json");
  bundle->add_option("--min-count", o.min_count, "Frequency threshold without --vocab");
  add_transform_flags(bundle, o);
  add_embedding_flags(bundle, o);

  auto *features = app.add_subcommand("features", "Print node feature vectors");
  features->add_option("input", o.input, "Graph or IR file")->required();
  features->add_option("--vocab", o.vocab_path, "Existing vocab.json");
  features->add_flag("--json", o.json, "Machine-readable output");
  add_transform_flags(features, o);
  add_embedding_flags(features, o);

  auto *dot = app.add_subcommand("dot", "Render a graph as Graphviz DOT");
  dot->add_option("input", o.input, "Graph or IR file")->required();
  dot->add_option("-o,--output", o.output, "Output file (default: stdout)");
  dot->add_flag("--full-text", o.full_text_labels, "Label instructions with full text");
  add_transform_flags(dot, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "pg: " << e.what() << "\n";
    return kExitFailure;
  }

  try {
    if (*build)
      return cmd_build(o, out, err);
    if (*corpus)
      return cmd_corpus(o, out, err);
    if (*stats)
      return cmd_stats(o, out, err);
    if (*embed)
      return cmd_embed(o, out, err);
    if (*vocab)
      return cmd_vocab(o, out, err);
    if (*bundle)
      return cmd_bundle(o, out, err);
    if (*features)
      return cmd_features(o, out, err);
    if (*dot)
      return cmd_dot(o, out, err);
  } catch (const IoError &e) {
    err << "pg: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error &e) {
    err << "pg: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::filesystem::filesystem_error &e) {
    err << "pg: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitFailure;
}

} // namespace perfograph::cli
