#include "ratcat_cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratcat/csp.hpp"
#include "ratcat/errors.hpp"
#include "ratcat/format.hpp"
#include "ratcat/parking.hpp"
#include "ratcat/q_analogs.hpp"
#include "ratcat/rational_nc.hpp"
#include "ratcat/symmetry.hpp"

namespace ratcat::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kMaxExhaustive = 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Cell {
  std::string text;
  json value;
};

Cell cell(long x) { return {std::to_string(x), x}; }
Cell cell(int x) { return cell(static_cast<long>(x)); }
Cell cell(bool x) { return {x ? "true" : "false", x}; }
Cell cell(const std::string& s) { return {s, s}; }
Cell cell(const mpz_class& x) {
  if (x.fits_slong_p()) return cell(x.get_si());
  return {x.get_str(), x.get_str()};
}
Cell cell(const std::vector<int>& xs) { return {format_int_list(xs), xs}; }
Cell cell(const SetPartition& p) { return {format_partition(p), p.blocks()}; }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void emit(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i].value;
      rows.push_back(std::move(obj));
    }
    out << rows.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i].text);
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].text.size());
  auto line = [&](auto get) {
    std::string s;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      std::string field = get(i);
      if (i + 1 < t.columns.size()) field.resize(width[i], ' ');
      s += (i ? "  " : "") + field;
    }
    out << s << "\n";
  };
  line([&](std::size_t i) { return t.columns[i]; });
  for (const auto& row : t.rows) line([&](std::size_t i) { return row[i].text; });
}

Slope make_slope(int a, int b) {
  const Slope s(a, b);
  if (a >= b) throw UsageError("need a < b");
  return s;
}

void guard(int n, bool force) {
  if (n > kMaxExhaustive && !force) {
    throw UsageError("exhaustive enumeration over [" + std::to_string(n) + "] refused; pass --force");
  }
}

std::string join_cycle_type(const std::vector<int>& lambda) { return format_int_list(lambda, " "); }

struct Options {
  std::string format = "table";
  bool force = false;
};

int cmd_paths(const Options& o, int a, int b, std::ostream& out) {
  const Slope s = make_slope(a, b);
  guard(b - 1, o.force);
  Table t{{"runs", "word", "valleys"}, {}};
  for (const auto& d : enumerate_paths(s)) t.add({cell(d.runs()), cell(d.word()), cell(static_cast<int>(valleys(d).size()))});
  emit(t, o.format, out);
  return 0;
}

int cmd_nc(const Options& o, int a, int b, int blocks, const std::string& ranks, std::ostream& out) {
  const Slope s = make_slope(a, b);
  guard(b - 1, o.force);
  std::vector<int> want;
  if (!ranks.empty()) {
    want = parse_int_list(ranks);
    if (static_cast<int>(want.size()) != a) throw UsageError("--ranks needs " + std::to_string(a) + " entries");
  }
  Table t{{"partition", "blocks", "rank_sequence"}, {}};
  for (const auto& p : enumerate_nc(s)) {
    if (blocks > 0 && static_cast<int>(p.block_count()) != blocks) continue;
    if (!want.empty()) {
      std::vector<int> counts(static_cast<std::size_t>(a), 0);
      for (long r : rank_assignment(p, s).ranks) ++counts[static_cast<std::size_t>(r - 1)];
      if (counts != want) continue;
    }
    t.add({cell(p), cell(static_cast<int>(p.block_count())), cell(rank_sequence(p, s).entries)});
  }
  emit(t, o.format, out);
  return 0;
}

int cmd_hnc(const Options& o, int a, int b, std::ostream& out) {
  const Slope s = make_slope(a, b);
  guard(a + b - 1, o.force);
  Table t{{"partition"}, {}};
  for (const auto& p : enumerate_hnc(s)) t.add({cell(p)});
  emit(t, o.format, out);
  return 0;
}

int cmd_member(const Options& o, int a, int b, const std::string& text, const std::string& method, std::ostream& out) {
  const Slope s = make_slope(a, b);
  const SetPartition p = parse_partition(text, b - 1);
  if (!is_noncrossing(p)) throw UsageError("partition is crossing");
  std::vector<std::pair<std::string, bool>> verdicts;
  if (method == "reconstruction" || method == "all") verdicts.emplace_back("reconstruction", is_member_reconstruction(p, s));
  if (method == "kreweras" || method == "all") verdicts.emplace_back("kreweras", is_member_kreweras(p, s));
  if (method == "rank-orbit" || method == "all") verdicts.emplace_back("rank-orbit", is_member_rank_orbit(p, s));
  Table t{{"method", "member"}, {}};
  for (const auto& [name, v] : verdicts) t.add({cell(name), cell(v)});
  emit(t, o.format, out);
  const bool agree = std::all_of(verdicts.begin(), verdicts.end(), [&](const auto& v) { return v.second == verdicts.front().second; });
  return agree ? 0 : 1;
}

int cmd_rank(const Options& o, int a, int b, const std::string& text, std::ostream& out) {
  const Slope s = make_slope(a, b);
  const RankAssignment ra = rank_assignment(parse_partition(text, b - 1), s);
  Table t{{"block", "rank"}, {}};
  for (std::size_t i = 0; i < ra.partition.block_count(); ++i) t.add({cell(ra.partition.blocks()[i]), cell(ra.ranks[i])});
  emit(t, o.format, out);
  return 0;
}

int cmd_krew(const Options& o, int n, const std::string& text, std::ostream& out) {
  const SetPartition p = parse_partition(text, n);
  Table t{{"partition", "kreweras"}, {}};
  t.add({cell(p), cell(kreweras(p))});
  emit(t, o.format, out);
  return 0;
}

std::string kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::Central:
      return "central";
    case BlockKind::Wrapping:
      return "wrapping";
    case BlockKind::Plain:
      return "plain";
  }
  return "";
}

int cmd_symmetric(const Options& o, int a, int b, int d, const std::string& count, std::ostream& out) {
  const SymmetricContext ctx(make_slope(a, b), d);
  guard(b - 1, o.force);
  const auto fixed = fixed_partitions(ctx);
  if (count.empty()) {
    Table t{{"partition", "sequence", "kinds", "noble"}, {}};
    for (const auto& p : fixed) {
      std::string kinds;
      for (BlockKind k : classify_blocks(p, ctx)) kinds += (kinds.empty() ? "" : " ") + kind_name(k);
      t.add({cell(p), cell(modified_rank_sequence(p, ctx).entries), cell(kinds), cell(is_noble_partition(p, ctx))});
    }
    emit(t, o.format, out);
    return 0;
  }

  std::vector<SymmetricShape> shapes;
  for (const auto& p : fixed) shapes.push_back(symmetric_shape(p, ctx));

  Table t{{"count", "formula", "brute", "ok"}, {}};
  bool ok = true;
  auto row = [&](const std::string& name, const mpz_class& formula, long brute) {
    ok = ok && formula == brute;
    t.add({cell(name), cell(formula), cell(brute), cell(formula == brute)});
  };
  const auto colon = count.find(':');
  const std::string family = count.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : count.substr(colon + 1);
  if (family == "catalan") {
    row("catalan", count_symmetric_catalan(ctx), static_cast<long>(fixed.size()));
  } else if (family == "kreweras") {
    std::vector<int> m = parse_int_list(arg);
    if (static_cast<int>(m.size()) > a) throw UsageError("kreweras:M takes at most a entries");
    m.resize(static_cast<std::size_t>(a), 0);
    const long brute = std::count_if(shapes.begin(), shapes.end(), [&](const SymmetricShape& sh) { return sh.rank_orbits == m; });
    row("kreweras:" + format_int_list(m), count_symmetric_kreweras(ctx, m), brute);
  } else if (family == "narayana") {
    const auto ps = parse_int_list(arg);
    if (ps.size() != 1) throw UsageError("narayana:P takes one integer");
    const int p = ps.front();
    for (bool central : {true, false}) {
      const long brute = std::count_if(shapes.begin(), shapes.end(),
                                       [&](const SymmetricShape& sh) { return sh.orbits == p && sh.central == central; });
      row(std::string("narayana:") + std::to_string(p) + (central ? " central" : " no-central"),
          count_symmetric_narayana(ctx, p, central), brute);
    }
  } else {
    throw UsageError("unknown --count family '" + family + "'");
  }
  emit(t, o.format, out);
  return ok ? 0 : 1;
}

int cmd_csp(const Options& o, int a, int b, const std::string& family, std::ostream& out) {
  const Slope s = make_slope(a, b);
  const auto colon = family.find(':');
  const std::string name = family.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : family.substr(colon + 1);
  CspInstance inst;
  if (name == "catalan") {
    guard(b - 1, o.force);
    inst = catalan_instance(s);
  } else if (name == "narayana") {
    guard(b - 1, o.force);
    const auto ks = parse_int_list(arg);
    if (ks.size() != 1 || ks.front() < 1 || ks.front() > a) throw UsageError("narayana:K needs 1 <= K <= a");
    inst = narayana_instance(s, ks.front());
  } else if (name == "kreweras") {
    guard(b - 1, o.force);
    inst = kreweras_instance(s, parse_int_list(arg));
  } else if (name == "homogeneous") {
    guard(a + b - 1, o.force);
    inst = homogeneous_instance(s);
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  const CspReport report = csp_verify(inst);
  Table t{{"d", "k", "eval", "fixed", "ok"}, {}};
  for (const auto& r : report.rows) {
    t.add({cell(r.d), cell(r.k), r.value ? cell(*r.value) : Cell{"n/a", nullptr}, cell(r.fixed), cell(r.ok)});
  }
  emit(t, o.format, out);
  return report.ok ? 0 : 1;
}

Cell parking_cell(const ParkingFunction& pf) {
  std::string text;
  json blocks = json::array();
  for (std::size_t i = 0; i < pf.labels.size(); ++i) {
    const auto& blk = pf.partition.blocks()[i];
    text += (text.empty() ? "" : " ") + format_block(blk) + "->" + format_int_list(pf.labels[i]);
    blocks.push_back({{"block", blk}, {"labels", pf.labels[i]}});
  }
  return {text, json{{"a", pf.slope.a()}, {"b", pf.slope.b()}, {"blocks", blocks}}};
}

int cmd_park(const Options& o, int a, int b, bool chars, const std::string& word, std::ostream& out) {
  const Slope s = make_slope(a, b);
  if (!word.empty()) {
    const ParkingFunction pf = from_slope_word(s, parse_int_list(word));
    Table t{{"word", "parking_function"}, {}};
    t.add({cell(to_slope_word(pf)), parking_cell(pf)});
    emit(t, o.format, out);
    return 0;
  }
  guard(b - 1, o.force);
  const auto park = enumerate_park(s);
  if (!chars) {
    Table t{{"parking_function", "word"}, {}};
    for (const auto& pf : park) t.add({parking_cell(pf), cell(to_slope_word(pf))});
    emit(t, o.format, out);
    return 0;
  }
  Table t{{"cycle_type", "d", "brute", "predicted", "ok"}, {}};
  bool ok = true;
  for (const auto& lambda : integer_partitions(a)) {
    const Permutation w = permutation_of_type(lambda);
    for (int d = 0; d < b - 1; ++d) {
      const long brute = character(park, w, d);
      const mpz_class predicted = predicted_character(s, w, d);
      ok = ok && predicted == brute;
      t.add({cell(join_cycle_type(lambda)), cell(d), cell(brute), cell(predicted), cell(predicted == brute)});
    }
  }
  emit(t, o.format, out);
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational Catalan combinatorics: paths, noncrossing partitions, cyclic sieving, parking functions",
               "ratcat"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_flag("--force", opt.force, "Allow exhaustive enumeration over more than 16 points");

  int a = 0, b = 0, n = 0, d = 0, blocks = 0;
  std::string ranks, partition, method = "reconstruction", count, family, word;
  bool chars = false;

  auto slope_args = [&](CLI::App* sub) {
    sub->add_option("A", a, "a")->required();
    sub->add_option("B", b, "b")->required();
  };
  std::function<int()> action;

  auto* paths = app.add_subcommand("paths", "List all a,b-Dyck paths");
  slope_args(paths);
  paths->callback([&] { action = [&] { return cmd_paths(opt, a, b, out); }; });

  auto* nc = app.add_subcommand("nc", "List NC(a,b)");
  slope_args(nc);
  auto* blocks_opt = nc->add_option("--blocks", blocks, "Keep partitions with K blocks");
  nc->add_option("--ranks", ranks, "Keep partitions with r_i blocks of rank i (R1,..,RA)")->excludes(blocks_opt);
  nc->callback([&] { action = [&] { return cmd_nc(opt, a, b, blocks, ranks, out); }; });

  auto* hnc = app.add_subcommand("hnc", "List HNC(a,b)");
  slope_args(hnc);
  hnc->callback([&] { action = [&] { return cmd_hnc(opt, a, b, out); }; });

  auto* member = app.add_subcommand("member", "Decide membership in NC(a,b)");
  slope_args(member);
  member->add_option("PARTITION", partition, "e.g. 1|2,7|3,4,5|6")->required();
  member->add_option("--method", method)->check(CLI::IsMember({"reconstruction", "kreweras", "rank-orbit", "all"}));
  member->callback([&] { action = [&] { return cmd_member(opt, a, b, partition, method, out); }; });

  auto* rank = app.add_subcommand("rank", "a,b-ranks of the blocks of a noncrossing partition");
  slope_args(rank);
  rank->add_option("PARTITION", partition)->required();
  rank->callback([&] { action = [&] { return cmd_rank(opt, a, b, partition, out); }; });

  auto* krew = app.add_subcommand("krew", "Kreweras complement");
  krew->add_option("N", n)->required();
  krew->add_option("PARTITION", partition)->required();
  krew->callback([&] { action = [&] { return cmd_krew(opt, n, partition, out); }; });

  auto* sym = app.add_subcommand("symmetric", "Partitions in NC(a,b) fixed by rot^d");
  slope_args(sym);
  sym->add_option("D", d)->required();
  sym->add_option("--count", count, "kreweras:M | narayana:P | catalan");
  sym->callback([&] { action = [&] { return cmd_symmetric(opt, a, b, d, count, out); }; });

  auto* csp = app.add_subcommand("csp", "Verify a cyclic sieving phenomenon");
  slope_args(csp);
  csp->add_option("--family", family, "catalan | narayana:K | kreweras:R | homogeneous")->required();
  csp->callback([&] { action = [&] { return cmd_csp(opt, a, b, family, out); }; });

  auto* park = app.add_subcommand("park", "Rational noncrossing parking functions");
  slope_args(park);
  auto* char_flag = park->add_flag("--char", chars, "Character table: brute force against the formula");
  park->add_option("--word", word, "Map a rational-slope parking word to its parking function")->excludes(char_flag);
  park->callback([&] { action = [&] { return cmd_park(opt, a, b, chars, word, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "ratcat: " << e.what() << "\n";
    return 2;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "ratcat: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "ratcat: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ratcat::cli
