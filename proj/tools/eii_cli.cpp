#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "eii/eii.hpp"
#include "eii/io.hpp"

namespace {

using namespace eii;

constexpr int kOk = 0;
constexpr int kResidual = 1;
constexpr int kUsage = 2;
constexpr int kCapability = 3;

// Stand-in for symbolic m or n in --epc: large enough that no bound term is clipped.
constexpr std::size_t kSymbolic = 1000;

struct Options {
  std::string code;
  std::string field;
  std::string layout = "tail";
  std::string mode = "rows";
  std::string in;
  std::string out;
  std::string g = "0..13";
  std::string epc;
  std::string model = "iterative";
  std::string lrc;
  std::string kind = "h2";
  std::size_t trials = 100000;
  std::uint64_t seed = 1;
  std::size_t erasures = 0;
  bool have_erasures = false;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t gval = 0;
  bool csv = false;
  bool no_fallback = false;
};

void emit(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(Errc::parse_error, "cannot write " + path);
  f << text;
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::parse_error, "cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
}

std::size_t to_size(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::parse_error, "bad " + what + " '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    out.push_back(cur);
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto v = to_size(s, "g");
    return {v, v};
  }
  const auto lo = to_size(s.substr(0, dots), "g range");
  const auto hi = to_size(s.substr(dots + 2), "g range");
  if (lo > hi) throw Error(Errc::parse_error, "empty g range " + s);
  return {lo, hi};
}

// Length or symbol.
std::size_t epc_dim(const std::string& s) {
  if (!s.empty() && std::isalpha(static_cast<unsigned char>(s[0]))) return kSymbolic;
  return to_size(s, "dimension");
}

template <class F>
typename F::value_type random_symbol(const F& field, std::mt19937_64& rng) {
  const int bits = field.degree();
  std::string hex;
  for (int top = (bits - 1) / 4 * 4; top >= 0; top -= 4) {
    const int width = std::min(4, bits - top);
    hex += "0123456789abcdef"[rng() & ((1u << width) - 1)];
  }
  return field.from_hex(hex);
}

AnyField pick_field(const Options& o, std::size_t length) {
  if (!o.field.empty()) return parse_field(o.field);
  return field_for_length(std::max<std::size_t>(length, 2));
}

Profile need_code(const Options& o) {
  if (o.code.empty()) throw Error(Errc::parse_error, "--code is required");
  return parse_profile(o.code);
}

int cmd_props(const Options& o) {
  const Profile p = need_code(o);
  Json j;
  j["code"] = p.to_string();
  j["m"] = p.rows();
  j["n"] = p.cols();
  j["k"] = dimension(p);
  j["d"] = min_distance(p);
  j["transpose"] = transpose_profile(p).to_string();
  const EpcParams ep = epc_params(p);
  j["epc"] = ep.to_string();
  try {
    j["distance_bound"] = distance_bound(ep);
  } catch (const Error& e) {
    if (e.code() != Errc::empty_range) throw;
    j["distance_bound"] = nullptr;
  }
  emit(j, o.out);
  return kOk;
}

std::vector<std::string> read_data(const Options& o) {
  const Json j = read_json(o.in);
  const Json& arr = j.is_object() ? j.at("data") : j;
  if (!arr.is_array()) throw Error(Errc::parse_error, "data must be an array of hex symbols");
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(v.get<std::string>());
  return out;
}

int cmd_encode(const Options& o) {
  const Profile p = need_code(o);
  if (o.layout != "tail" && o.layout != "balanced") {
    throw Error(Errc::parse_error, "--layout must be tail or balanced");
  }
  return std::visit(
      [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        using T = typename F::value_type;
        const EiiCode<F> code(field, p);
        std::vector<T> data;
        if (!o.in.empty()) {
          for (const auto& h : read_data(o)) data.push_back(field.from_hex(h));
        } else {
          std::mt19937_64 rng(o.seed);
          for (std::size_t i = 0; i < code.dimension(); ++i) data.push_back(random_symbol(field, rng));
        }
        const auto grid = o.layout == "tail" ? code.encode(data) : encode_balanced(code, data);
        emit(to_json(grid_to_file(field, grid, p.to_string())), o.out);
        return kOk;
      },
      pick_field(o, std::max(p.rows(), p.cols())));
}

const char* kind_name(RowOutcome::Kind k) {
  switch (k) {
    case RowOutcome::Kind::clean: return "clean";
    case RowOutcome::Kind::corrected_c0: return "corrected_c0";
    case RowOutcome::Kind::corrected_cw: return "corrected_nested";
    case RowOutcome::Kind::failed: return "failed";
  }
  return "?";
}

int cmd_decode(const Options& o) {
  if (o.in.empty()) throw Error(Errc::parse_error, "--in is required");
  const GridFile file = parse_grid_file(read_json(o.in));
  std::string spec = o.code.empty() ? file.code.value_or("") : o.code;
  if (spec.empty()) throw Error(Errc::parse_error, "no code in grid file; pass --code");
  const Profile p = parse_profile(spec);
  if (p.rows() != file.m || p.cols() != file.n) {
    throw Error(Errc::parse_error, "grid shape does not match " + p.to_string());
  }
  return std::visit(
      [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        const EiiCode<F> code(field, p);
        const auto grid = grid_from_file(field, file);
        Json report;
        bool ok = false;
        SymbolGrid<typename F::value_type> result = grid;
        if (o.mode == "errors") {
          const auto r = decode_errors_erasures(code, grid, !o.no_fallback);
          report["mode"] = o.mode;
          report["status"] = status_name(r.status);
          report["rotations"] = r.rotations;
          report["fallback_used"] = r.fallback_used;
          Json rows = Json::array();
          for (const auto& row : r.rows) {
            Json x;
            x["outcome"] = kind_name(row.kind);
            x["level"] = row.level;
            x["errors"] = row.errors;
            x["rotations"] = row.rotations;
            rows.push_back(x);
          }
          report["rows"] = rows;
          ok = r.status == ErrorDecodeStatus::corrected;
          result = r.grid;
        } else {
          DecodeReport<typename F::value_type> r;
          if (o.mode == "rows") {
            r = code.decode_rows(grid);
          } else if (o.mode == "cols") {
            r = code.transpose().decode_rows(transpose_grid(grid));
            r.grid = transpose_grid(r.grid);
            for (auto& c : r.residual) std::swap(c.first, c.second);
            std::sort(r.residual.begin(), r.residual.end());
          } else if (o.mode == "iterative") {
            r = iterative_decode(code, grid);
          } else {
            throw Error(Errc::parse_error, "--mode must be rows, cols, iterative or errors");
          }
          report = report_json(r, o.mode);
          ok = r.status == DecodeStatus::fully_corrected;
          result = r.grid;
        }
        Json out;
        out["report"] = report;
        out["grid"] = to_json(grid_to_file(field, result, p.to_string()));
        emit(out, o.out);
        return ok ? kOk : kResidual;
      },
      field_from_descriptor(file.degree, file.modulus));
}

int cmd_layout(const Options& o) {
  const Profile p = need_code(o);
  ParityLayout layout;
  if (o.layout == "tail") {
    layout = make_tail_layout(p);
  } else if (o.layout == "balanced") {
    layout = balanced_layout(p);
  } else {
    throw Error(Errc::parse_error, "--layout must be tail or balanced");
  }
  emit(layout_json(p, layout), o.out);
  return kOk;
}

int cmd_bound(const Options& o) {
  EpcParams base;
  if (!o.code.empty()) {
    base = epc_params(parse_profile(o.code));
  } else if (!o.epc.empty()) {
    const auto parts = split(o.epc, ';');
    if (parts.size() != 2) throw Error(Errc::parse_error, "--epc must look like m,v;n,h");
    const auto col = split(parts[0], ',');
    const auto row = split(parts[1], ',');
    if (col.size() != 2 || row.size() != 2) throw Error(Errc::parse_error, "--epc must look like m,v;n,h");
    base = EpcParams{epc_dim(col[0]), to_size(col[1], "v"), epc_dim(row[0]), to_size(row[1], "h"), 0};
  } else {
    throw Error(Errc::parse_error, "bound needs --epc or --code");
  }
  auto [lo, hi] = o.code.empty() ? parse_range(o.g) : std::pair{base.g, base.g};
  std::vector<std::size_t> lrc_n;
  if (!o.lrc.empty()) {
    const auto parts = split(o.lrc, ',');
    if (parts.size() != 2) throw Error(Errc::parse_error, "--lrc must be n,h");
    lrc_n = {to_size(parts[0], "n"), to_size(parts[1], "h")};
  }
  std::ostringstream text;
  const char* sep = o.csv ? "," : "";
  auto cell = [&](const std::string& s, int w) {
    if (o.csv) {
      text << s;
    } else {
      text << std::setw(w) << s;
    }
  };
  cell("g", 4);
  text << sep;
  cell("bound", 7);
  text << sep;
  cell("a", 5);
  if (!lrc_n.empty()) {
    text << sep;
    cell("lrc", 6);
  }
  text << "\n";
  for (std::size_t g = lo; g <= hi; ++g) {
    EpcParams ep = base;
    ep.g = g;
    const auto terms = bound_terms(ep);
    const auto best = std::min_element(terms.begin(), terms.end(),
                                       [](const BoundTerm& x, const BoundTerm& y) { return x.d < y.d; });
    cell(std::to_string(g), 4);
    text << sep;
    cell(std::to_string(best->d), 7);
    text << sep;
    cell(std::to_string(best->a), 5);
    if (!lrc_n.empty()) {
      text << sep;
      cell(std::to_string(lrc_bound(lrc_n[0], lrc_n[1], g)), 6);
    }
    text << "\n";
  }
  if (o.out.empty() || o.out == "-") {
    std::cout << text.str();
  } else {
    std::ofstream f(o.out);
    f << text.str();
  }
  return kOk;
}

int cmd_simulate(const Options& o) {
  if (o.trials == 0) throw Error(Errc::parse_error, "--trials must be positive");
  if (o.model == "birthday") {
    if (o.m == 0) throw Error(Errc::parse_error, "birthday needs --m");
    Json j = sim_result_json(birthday_simulation(o.m, o.trials, o.seed), "");
    j["expected"] = birthday_expected(o.m);
    emit(j, o.out);
    return kOk;
  }
  std::optional<DecoderModel> model;
  std::string label;
  if (o.model == "lrc") {
    const auto parts = split(o.lrc, ',');
    if (parts.size() != 4) throw Error(Errc::parse_error, "--lrc must be groups,n,h,d");
    model = DecoderModel::ideal_lrc(to_size(parts[0], "groups"), to_size(parts[1], "n"),
                                    to_size(parts[2], "h"), to_size(parts[3], "d"));
  } else {
    const Profile p = need_code(o);
    label = p.to_string();
    if (o.model == "rows") {
      model = DecoderModel::rows_only(p);
    } else if (o.model == "cols") {
      model = DecoderModel::cols_only(p);
    } else if (o.model == "iterative") {
      model = DecoderModel::iterative(p);
    } else {
      throw Error(Errc::parse_error, "--model must be rows, cols, iterative, lrc or birthday");
    }
  }
  const SimResult r = o.have_erasures ? correction_probability(*model, o.erasures, o.trials, o.seed)
                                      : mean_erasures_to_failure(*model, o.trials, o.seed);
  emit(sim_result_json(r, label), o.out);
  return kOk;
}

int cmd_matrix(const Options& o) {
  if (o.kind == "eii") {
    const Profile p = need_code(o);
    return std::visit(
        [&](const auto& field) {
          using F = std::decay_t<decltype(field)>;
          emit(matrix_json(field, EiiCode<F>(field, p).assemble_parity_check()), o.out);
          return kOk;
        },
        pick_field(o, std::max(p.rows(), p.cols())));
  }
  if (o.m == 0 || o.n == 0) throw Error(Errc::parse_error, "--m and --n are required");
  const AnyField f = !o.field.empty() ? parse_field(o.field)
                     : o.kind == "hg" ? AnyField(default_field(static_cast<int>(hg_required_degree(o.m, o.n, o.gval))))
                                      : AnyField(default_field(4));
  return std::visit(
      [&](const auto& field) {
        if (o.kind == "h2") {
          emit(matrix_json(field, build_H2(field, o.m, o.n)), o.out);
        } else if (o.kind == "hg") {
          emit(matrix_json(field, build_Hg(field, o.m, o.n, o.gval)), o.out);
        } else {
          throw Error(Errc::parse_error, "--kind must be eii, h2 or hg");
        }
        return kOk;
      },
      f);
}

bool capability(Errc c) {
  return c == Errc::field_too_small || c == Errc::length_exceeds_order || c == Errc::order_too_small ||
         c == Errc::too_large;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EII and EPC erasure codes"};
  app.require_subcommand(1);
  Options o;

  auto* props = app.add_subcommand("props", "dimension, distance, transpose and bound of a code");
  props->add_option("--code", o.code, "profile, e.g. C(7,[1,1,3,4,7,7])")->required();
  props->add_option("--out", o.out);

  auto* encode = app.add_subcommand("encode", "encode data into a grid file");
  encode->add_option("--code", o.code)->required();
  encode->add_option("--field", o.field, "DEG:HEX or mp:P");
  encode->add_option("--layout", o.layout)->check(CLI::IsMember({"tail", "balanced"}));
  encode->add_option("--in", o.in, "JSON array of hex symbols; random data when absent");
  encode->add_option("--seed", o.seed);
  encode->add_option("--out", o.out);

  auto* decode = app.add_subcommand("decode", "decode a grid file with null erasures");
  decode->add_option("--in", o.in)->required();
  decode->add_option("--code", o.code);
  decode->add_option("--mode", o.mode)->check(CLI::IsMember({"rows", "cols", "iterative", "errors"}));
  decode->add_flag("--no-fallback", o.no_fallback, "errors mode: skip the column attempt");
  decode->add_option("--out", o.out);

  auto* layout = app.add_subcommand("layout", "parity coordinates");
  layout->add_option("--code", o.code)->required();
  layout->add_option("--layout", o.layout)->check(CLI::IsMember({"tail", "balanced"}));
  layout->add_option("--out", o.out);

  auto* bound = app.add_subcommand("bound", "distance bound table over a g range");
  bound->add_option("--epc", o.epc, "m,v;n,h with m or n symbolic allowed");
  bound->add_option("--code", o.code);
  bound->add_option("--g", o.g, "lo..hi");
  bound->add_option("--lrc", o.lrc, "n,h for an extra LRC column");
  bound->add_flag("--csv", o.csv);
  bound->add_option("--out", o.out);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo erasure simulation");
  simulate->add_option("--model", o.model)
      ->check(CLI::IsMember({"rows", "cols", "iterative", "lrc", "birthday"}));
  simulate->add_option("--code", o.code);
  simulate->add_option("--lrc", o.lrc, "groups,n,h,d");
  simulate->add_option("--m", o.m, "birthday bins");
  simulate->add_option("--trials", o.trials);
  simulate->add_option("--seed", o.seed);
  auto* er = simulate->add_option("--erasures", o.erasures, "estimate P(correctable) at this count");
  simulate->add_option("--out", o.out);

  auto* matrix = app.add_subcommand("matrix", "export a parity-check matrix");
  matrix->add_option("--kind", o.kind)->check(CLI::IsMember({"eii", "h2", "hg"}));
  matrix->add_option("--code", o.code);
  matrix->add_option("--field", o.field);
  matrix->add_option("--m", o.m);
  matrix->add_option("--n", o.n);
  matrix->add_option("--g", o.gval);
  matrix->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  o.have_erasures = er->count() > 0;

  try {
    if (*props) return cmd_props(o);
    if (*encode) return cmd_encode(o);
    if (*decode) return cmd_decode(o);
    if (*layout) return cmd_layout(o);
    if (*bound) return cmd_bound(o);
    if (*simulate) return cmd_simulate(o);
    if (*matrix) return cmd_matrix(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return capability(e.code()) ? kCapability : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
