#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chain_file.hpp"
#include "freeman/chain_core.hpp"
#include "freeman/convexity.hpp"
#include "freeman/path_graph.hpp"
#include "freeman/tiling.hpp"
#include "freeman/word_factor.hpp"
#include "polyomino.hpp"
#include "render.hpp"

namespace freeman::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Machine };

struct Input {
  std::string name;
  ChainRecord record;
};

bool is_literal_word(const std::string& arg) {
  return !arg.empty() && std::all_of(arg.begin(), arg.end(), [](char c) { return c >= '0' && c <= '3'; });
}

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Each argument is a literal word or a chain file; "-" and no arguments read stdin.
std::vector<Input> load_inputs(const std::vector<std::string>& args, std::istream& in) {
  std::vector<ChainRecord> records;
  auto append = [&records](const ChainFile& f) {
    records.insert(records.end(), f.records.begin(), f.records.end());
  };
  if (args.empty()) append(parse_chain_file(slurp(in)));
  for (const auto& arg : args) {
    if (arg == "-") {
      append(parse_chain_file(slurp(in)));
    } else if (is_literal_word(arg)) {
      records.push_back({std::nullopt, ChainWord::parse(arg), std::nullopt});
    } else {
      std::ifstream file(arg, std::ios::binary);
      if (!file) throw Error("cannot open '" + arg + "'");
      try {
        append(parse_chain_file(slurp(file)));
      } catch (const ParseError& e) {
        throw Error(arg + ": " + e.what());
      }
    }
  }
  std::vector<Input> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    out.push_back({records[i].name.value_or("#" + std::to_string(i + 1)), records[i]});
  }
  return out;
}

std::string text_value(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.empty()) return "\"\"";
    return s.find(' ') == std::string::npos ? s : "\"" + s + "\"";
  }
  if (v.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < v.size(); ++i) joined += (i ? ";" : "") + text_value(v[i]);
    return joined.empty() ? "-" : joined;
  }
  return v.dump();
}

void emit(std::ostream& out, Format format, const Json& report) {
  if (format == Format::Machine) {
    out << report.dump() << '\n';
    return;
  }
  bool first = true;
  for (const auto& [k, v] : report.items()) {
    out << (first ? "" : " ") << k << '=' << text_value(v);
    first = false;
  }
  out << '\n';
}

Json base(const Input& in) {
  Json r;
  r["name"] = in.name;
  r["word"] = in.record.word.str();
  return r;
}

bool analyze(const Input& in, Json& r) {
  const ChainWord& w = in.record.word;
  const bool closed = is_closed(w);
  const bool simple = is_simple(w);
  r["closed"] = closed;
  r["simple"] = simple;
  r["T"] = turning_number(w, closed ? Reading::Circular : Reading::Linear).str();
  r["S"] = nullptr;
  r["R"] = nullptr;
  if (is_boundary_word(w)) {
    const CornerCount sr = salient_reentrant(CircularWord(w));
    r["S"] = sr.salient;
    r["R"] = sr.reentrant;
  }
  return closed && simple;
}

bool intersect(const Input& in, Json& r) {
  const ChainWord& w = in.record.word;
  const auto hit = detect_first_intersection(w);
  const bool closure = hit && hit->index == w.size() && is_closed(w);
  r["intersection"] = hit.has_value();
  r["index"] = hit ? Json(hit->index) : Json(nullptr);
  r["x"] = hit ? Json(hit->point.x) : Json(nullptr);
  r["y"] = hit ? Json(hit->point.y) : Json(nullptr);
  r["closure"] = closure;
  return !hit || closure;
}

bool convex(const Input& in, Json& r) {
  const CircularWord c(in.record.word);
  const bool boundary = is_boundary_word(c);
  r["boundary"] = boundary;
  r["convex"] = nullptr;
  r["arcs"] = nullptr;
  if (!boundary) return false;
  const ExtremalSplit split = split_extremal(c);
  const bool result = is_digitally_convex(c);
  r["convex"] = result;
  Json arcs = Json::array();
  for (const auto& a : split.arcs) arcs.push_back(a.str());
  r["arcs"] = arcs;
  for (std::size_t i = 0; i < 4; ++i) {
    const ChainWord framed = framed_arc(split, i);
    const bool binary = std::all_of(framed.begin(), framed.end(),
                                    [](Letter a) { return a == Letter::Right || a == Letter::Up; });
    Json f = nullptr;
    if (binary && !framed.empty()) f = lyndon_factorize(framed).str();
    r["lyndon" + std::to_string(i + 1)] = f;
  }
  return result;
}

bool tile(const Input& in, Json& r) {
  const CircularWord c(in.record.word);
  const auto all = bn_factorizations(c);
  r["class"] = to_string(classify(all));
  r["squares"] = std::count_if(all.begin(), all.end(), [](const auto& f) { return f.is_square(); });
  Json list = Json::array();
  for (const auto& f : all) {
    std::string cuts;
    for (std::size_t i = 0; i < f.cuts.size(); ++i) cuts += (i ? "," : "") + std::to_string(f.cuts[i]);
    list.push_back(cuts);
  }
  r["factorizations"] = list;
  return !all.empty();
}

template <typename Analysis>
int batch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
          Format format, bool check, Analysis analysis) {
  bool all_true = true;
  for (const auto& input : load_inputs(args, in)) {
    Json r = base(input);
    all_true = analysis(input, r) && all_true;
    emit(out, format, r);
  }
  return check && !all_true ? kCheckFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Freeman chain-code analysis: simplicity, turning number, convexity, tilings",
               "freeman"};
  app.require_subcommand(1);

  Format format = Format::Text;
  bool check = false;
  std::vector<std::string> inputs;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"machine", Format::Machine}};

  auto add_batch = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", inputs, "Words (digits 0-3), chain files, or - for stdin");
    sub->add_option("--format", format, "Report format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_flag("--check", check, "Exit with status 1 when any record fails the analysis");
    return sub;
  };
  auto* analyze_cmd = add_batch("analyze", "Closed, simple, turning number, salient/reentrant counts");
  auto* intersect_cmd = add_batch("intersect", "First revisited lattice point");
  auto* convex_cmd = add_batch("convex", "Digital convexity with arc factorizations");
  auto* tile_cmd = add_batch("tile", "Tile class and BN-factorizations");

  std::string raw_word;
  auto* lyndon_cmd = app.add_subcommand("lyndon", "Lyndon factorization of a word");
  lyndon_cmd->add_option("word", raw_word, "Word over 0-3")->required();
  lyndon_cmd->add_option("--format", format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;
  auto* christoffel_cmd = app.add_subcommand("christoffel", "Lower Christoffel word with a 0s and b 1s");
  christoffel_cmd->add_option("a", zeros, "Number of 0 letters")->required();
  christoffel_cmd->add_option("b", ones, "Number of 1 letters")->required();
  christoffel_cmd->add_option("--format", format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  EdgeLabels labels = EdgeLabels::None;
  std::string svg_path;
  bool mark_cuts = false;
  auto* render_cmd = app.add_subcommand("render", "SVG drawing of the first input record");
  render_cmd->add_option("inputs", inputs, "Word, chain file, or - for stdin");
  render_cmd->add_option("--labels", labels, "Edge labels")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, EdgeLabels>{{"letters", EdgeLabels::Letters}, {"delta", EdgeLabels::Delta}},
          CLI::ignore_case));
  render_cmd->add_option("--svg", svg_path, "Output file (default: stdout)");
  render_cmd->add_flag("--cuts", mark_cuts, "Mark the cuts of the first BN-factorization");

  std::size_t cells = 10;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  auto* gen_cmd = app.add_subcommand("gen", "Random polyomino boundary words (chain-file lines)");
  gen_cmd->add_option("--cells", cells, "Cells per polyomino")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", seed, "Seed of the first polyomino");
  gen_cmd->add_option("--count", count, "Number of polyominoes (seeds seed, seed+1, ...)");
  gen_cmd->add_option("--format", format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kInputError;
  }

  try {
    if (*analyze_cmd) return batch(inputs, in, out, format, check, analyze);
    if (*intersect_cmd) return batch(inputs, in, out, format, check, intersect);
    if (*convex_cmd) return batch(inputs, in, out, format, check, convex);
    if (*tile_cmd) return batch(inputs, in, out, format, check, tile);

    if (*lyndon_cmd) {
      const LyndonFactorization f = lyndon_factorize(ChainWord::parse(raw_word));
      if (format == Format::Text) {
        out << f.str() << '\n';
      } else {
        Json r;
        r["word"] = raw_word;
        r["factors"] = Json::array();
        for (const auto& l : f.factors) r["factors"].push_back({{"word", l.word.str()}, {"exponent", l.exponent}});
        out << r.dump() << '\n';
      }
      return kOk;
    }

    if (*christoffel_cmd) {
      const ChainWord w = christoffel(zeros, ones);
      if (format == Format::Text) {
        out << w << '\n';
      } else {
        out << Json{{"a", zeros}, {"b", ones}, {"word", w.str()}}.dump() << '\n';
      }
      return kOk;
    }

    if (*render_cmd) {
      const auto loaded = load_inputs(inputs, in);
      if (loaded.empty()) throw Error("render needs one input record");
      const ChainRecord& rec = loaded.front().record;
      ChainWord w = rec.word;
      RenderOptions options;
      options.labels = labels;
      if (mark_cuts) {
        const CircularWord c(w);
        const auto all = bn_factorizations(c);
        if (!all.empty()) {
          w = c.canonical();
          options.cuts = all.front().cuts;
        }
      }
      const std::string svg = render_svg(trace(w, rec.start.value_or(Point{})), options);
      if (svg_path.empty()) {
        out << svg;
      } else {
        std::ofstream file(svg_path, std::ios::binary);
        if (!file || !(file << svg)) throw Error("cannot write '" + svg_path + "'");
      }
      return kOk;
    }

    if (*gen_cmd) {
      for (std::size_t i = 0; i < count; ++i) {
        const CircularWord c = gen_random_polyomino(cells, seed + i);
        const std::string name = "p" + std::to_string(seed + i);
        if (format == Format::Text) {
          out << name << ": " << c.representative() << '\n';
        } else {
          out << Json{{"name", name}, {"cells", cells}, {"seed", seed + i}, {"word", c.representative().str()}}.dump()
              << '\n';
        }
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "freeman: " << e.what() << '\n';
    return kInputError;
  }
  err << app.help();
  return kInputError;
}

}  // namespace freeman::cli
