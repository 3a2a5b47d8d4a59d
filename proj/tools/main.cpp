#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "smlab/braid.hpp"
#include "smlab/errors.hpp"
#include "smlab/genericity.hpp"
#include "smlab/nilpotent.hpp"
#include "smlab/text_format.hpp"
#include "smlab/thompson.hpp"
#include "smlab/whitehead.hpp"
#include "smlab/words.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

/// Usage/input problems: message to stderr, exit 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconclusive = 2;

std::uint64_t parse_seed_text(const std::string& text, const std::string& origin) {
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw UsageError(origin + ": malformed seed '" + text + "'");
  }
  return value;
}

/// --seed wins; SMLAB_SEED is the fallback; otherwise 0.
std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t seed_flag) {
  if (seed_opt->count() > 0) return seed_flag;
  if (const char* env = std::getenv("SMLAB_SEED")) {
    return parse_seed_text(env, "SMLAB_SEED");
  }
  return 0;
}

/// Words come from --word/--word2 first, then line by line from --input or
/// stdin.
class WordSource {
 public:
  explicit WordSource(const std::string& input_path) {
    if (!input_path.empty()) {
      file_.open(input_path);
      if (!file_) throw UsageError("cannot open input file '" + input_path + "'");
      stream_ = &file_;
    } else {
      stream_ = &std::cin;
    }
  }

  std::string next(const std::string& what) {
    std::string line;
    if (!std::getline(*stream_, line)) {
      throw UsageError("missing " + what +
                       " (pass --word/--word2, --input, or pipe words on stdin)");
    }
    return line;
  }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

std::string fetch_line(const std::string& flag_value, WordSource& source,
                       const std::string& what) {
  if (!flag_value.empty()) return flag_value;
  return source.next(what);
}

smlab::Word parse_free_word(const std::string& line) {
  const auto tokens = smlab::parse_signed_tokens(line);
  std::vector<int> signed_letters;
  signed_letters.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].index < 1) {
      throw smlab::ParseError(i + 1, "free-group generator index must be >= 1");
    }
    signed_letters.push_back(tokens[i].sign * tokens[i].index);
  }
  return smlab::Word::from_signed(signed_letters);
}

std::vector<int> parse_positive_indices(const std::string& line, int min_index) {
  const auto tokens = smlab::parse_signed_tokens(line);
  std::vector<int> letters;
  letters.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].sign < 0) {
      throw smlab::ParseError(i + 1, "positive word cannot contain inverse letters");
    }
    if (tokens[i].index < min_index) {
      throw smlab::ParseError(i + 1, "generator index must be >= " +
                                         std::to_string(min_index));
    }
    letters.push_back(tokens[i].index);
  }
  return letters;
}

void emit_json(const ordered_json& payload) {
  std::cout << payload.dump(2) << '\n';
}

std::string verdict_name(smlab::whitehead::VerdictKind kind) {
  return kind == smlab::whitehead::VerdictKind::NotPrimitive ? "NotPrimitive"
                                                             : "Inconclusive";
}

std::string certificate_name(smlab::whitehead::CertificateKind kind) {
  switch (kind) {
    case smlab::whitehead::CertificateKind::NoCutVertexNoIsolatedEdge:
      return "NoCutVertexNoIsolatedEdge";
    case smlab::whitehead::CertificateKind::CompleteSampledGraph:
      return "CompleteSampledGraph";
    case smlab::whitehead::CertificateKind::None:
      break;
  }
  return "None";
}

/// Sweep/profile CSV gets the config snapshot as leading comment lines.
void emit_csv(const std::vector<std::pair<std::string, std::string>>& config,
              const std::string& body, bool quiet) {
  if (!quiet) {
    for (const auto& [key, value] : config) {
      std::cout << "# " << key << '=' << value << '\n';
    }
  }
  std::cout << body;
}

struct FormatOpt {
  std::string value = "json";
};

void add_format_option(CLI::App* cmd, FormatOpt& fmt, const std::string& default_value) {
  fmt.value = default_value;
  cmd->add_option("--format", fmt.value, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

int run_whitehead(bool sublinear, int rank, double delta, std::uint64_t seed,
                  std::size_t length, const std::string& word_flag,
                  const std::string& input_path, bool quiet) {
  if (rank < 2) throw UsageError("--rank must be >= 2");
  if (sublinear && !(delta > 0.0 && delta < 1.0)) {
    throw UsageError("--delta must lie strictly between 0 and 1");
  }
  const smlab::Alphabet alphabet{rank};
  smlab::Rng rng = smlab::make_rng(seed);

  smlab::Word u;
  bool sampled = false;
  if (length > 0) {
    u = smlab::random_reduced_word(alphabet, length, rng);
    sampled = true;
  } else {
    WordSource source(input_path);
    u = smlab::free_reduce(parse_free_word(fetch_line(word_flag, source, "word")));
  }
  for (const smlab::Letter& l : u.letters()) {
    if (l.generator > rank) {
      throw UsageError("word uses generator x_" + std::to_string(l.generator) +
                       " beyond --rank " + std::to_string(rank));
    }
  }

  const smlab::whitehead::PrimitivityVerdict verdict =
      sublinear ? smlab::whitehead::sublinear_nonprimitivity_test(u, alphabet, delta, rng)
                : smlab::whitehead::certify_nonprimitive_full(u, alphabet);

  ordered_json out;
  out["verdict"] = verdict_name(verdict.kind);
  out["certificate_kind"] = certificate_name(verdict.certificate);
  if (sublinear) {
    out["window_start"] = verdict.window_start;
    out["window_length"] = verdict.window_length;
  } else {
    out["window_start"] = nullptr;
    out["window_length"] = nullptr;
  }
  out["letters_read"] = verdict.letters_read;
  out["rank"] = rank;
  out["delta"] = sublinear ? ordered_json(delta) : ordered_json(nullptr);
  out["seed"] = sublinear || sampled ? ordered_json(seed) : ordered_json(nullptr);
  if (!quiet) {
    ordered_json config;
    config["subcommand"] = sublinear ? "whitehead-test" : "whitehead-full";
    config["rank"] = rank;
    if (sublinear) config["delta"] = delta;
    config["seed"] = seed;
    if (sampled) config["length"] = length;
    config["word_length"] = u.size();
    out["config"] = config;
  }
  emit_json(out);
  return verdict.kind == smlab::whitehead::VerdictKind::NotPrimitive
             ? kExitSuccess
             : kExitInconclusive;
}

int run_mc_equal(int cls, const std::string& word_flag, const std::string& word2_flag,
                 const std::string& input_path, bool quiet) {
  if (cls < 1) throw UsageError("--class must be >= 1");
  WordSource source(input_path);
  const smlab::PositiveWord w1(
      parse_positive_indices(fetch_line(word_flag, source, "word"), 1));
  const smlab::PositiveWord w2(
      parse_positive_indices(fetch_line(word2_flag, source, "word2"), 1));

  const smlab::nilpotent::McResult result = smlab::nilpotent::mc_equal_detail(w1, w2, cls);

  ordered_json out;
  out["equal"] = result.equal;
  if (result.first_discrepant_monomial) {
    out["first_discrepant_monomial"] = result.first_discrepant_monomial->indices;
  }
  out["degrees_checked"] = result.degrees_checked;
  if (!quiet) {
    ordered_json config;
    config["subcommand"] = "mc-equal";
    config["class"] = cls;
    out["config"] = config;
  }
  emit_json(out);
  return kExitSuccess;
}

int run_malcev(int cls, const std::string& word_flag, const std::string& word2_flag,
               const std::string& input_path, bool quiet) {
  if (cls < 1) throw UsageError("--class must be >= 1");
  WordSource source(input_path);
  const smlab::PositiveWord w1(
      parse_positive_indices(fetch_line(word_flag, source, "word"), 1));
  const smlab::PositiveWord w2(
      parse_positive_indices(fetch_line(word2_flag, source, "word2"), 1));
  if (w1.empty() || w2.empty()) throw UsageError("malcev needs nonempty words");

  const smlab::nilpotent::MalcevPair pair = smlab::nilpotent::malcev_sequence(w1, w2, cls);
  const smlab::nilpotent::CommonMultipleWitness witness =
      smlab::nilpotent::common_multiple_witness(w1, w2, cls);

  ordered_json out;
  out["u"] = smlab::format_positive(pair.u);
  out["v"] = smlab::format_positive(pair.v);
  out["z1"] = smlab::format_positive(witness.z1);
  out["z2"] = smlab::format_positive(witness.z2);
  out["stage"] = pair.stage;
  if (!quiet) {
    ordered_json config;
    config["subcommand"] = "malcev";
    config["class"] = cls;
    out["config"] = config;
  }
  emit_json(out);
  return kExitSuccess;
}

int run_thompson_fill(const std::string& word_flag, const std::string& word2_flag,
                      const std::string& input_path, bool dump_grid, bool quiet) {
  WordSource source(input_path);
  const std::vector<int> w1 =
      parse_positive_indices(fetch_line(word_flag, source, "word"), 0);
  const std::vector<int> w2 =
      parse_positive_indices(fetch_line(word2_flag, source, "word2"), 0);
  if (w1.empty() || w2.empty()) throw UsageError("thompson-fill needs nonempty words");

  const smlab::thompson::GridFill fill = smlab::thompson::grid_fill(w1, w2);

  ordered_json out;
  out["z1"] = smlab::format_positive(fill.z1);
  out["z2"] = smlab::format_positive(fill.z2);
  out["verified"] = true;  // grid_fill re-checks the boundary identity
  if (dump_grid) {
    ordered_json grid;
    grid["width"] = fill.diagram.width;
    grid["height"] = fill.diagram.height;
    grid["horizontal"] = fill.diagram.horizontal;
    grid["vertical"] = fill.diagram.vertical;
    out["grid"] = grid;
  }
  if (!quiet) {
    ordered_json config;
    config["subcommand"] = "thompson-fill";
    config["dump_grid"] = dump_grid;
    out["config"] = config;
  }
  emit_json(out);
  return kExitSuccess;
}

int run_thompson_nf(const std::string& word_flag, const std::string& input_path,
                    bool quiet) {
  WordSource source(input_path);
  const std::string line = fetch_line(word_flag, source, "word");
  const auto tokens = smlab::parse_signed_tokens(line);
  std::vector<smlab::thompson::Letter> letters;
  letters.reserve(tokens.size());
  for (const smlab::SignedToken& t : tokens) {
    letters.push_back(smlab::thompson::Letter{t.index, t.sign});
  }

  const smlab::thompson::TNormalForm nf =
      smlab::thompson::normal_form(smlab::thompson::Word(std::move(letters)));

  ordered_json out;
  out["positive_part"] = nf.positive_part;
  out["negative_part"] = nf.negative_part;
  if (!quiet) {
    ordered_json config;
    config["subcommand"] = "thompson-nf";
    out["config"] = config;
  }
  emit_json(out);
  return kExitSuccess;
}

int run_braid_reverse(int strands, const std::string& word_flag,
                      const std::string& word2_flag, const std::string& input_path,
                      bool quiet) {
  if (strands < 2) throw UsageError("--strands must be >= 2");
  WordSource source(input_path);
  const smlab::braid::Word w1(
      strands, parse_positive_indices(fetch_line(word_flag, source, "word"), 1));
  const smlab::braid::Word w2(
      strands, parse_positive_indices(fetch_line(word2_flag, source, "word2"), 1));

  const smlab::braid::ReversingResult result = smlab::braid::subword_reversing(w1, w2);

  ordered_json out;
  out["u"] = smlab::format_positive(result.u.letters());
  out["v"] = smlab::format_positive(result.v.letters());
  out["steps"] = result.steps;
  out["max_intermediate_length"] = result.max_intermediate_length;
  if (!quiet) {
    ordered_json config;
    config["subcommand"] = "braid-reverse";
    config["strands"] = strands;
    out["config"] = config;
  }
  emit_json(out);
  return kExitSuccess;
}

int run_braid_test(int strands, const std::string& word_flag,
                   const std::string& word2_flag, const std::string& input_path,
                   bool quiet) {
  if (strands < 2) throw UsageError("--strands must be >= 2");
  WordSource source(input_path);
  const smlab::braid::Word a(
      strands, parse_positive_indices(fetch_line(word_flag, source, "word"), 1));
  const smlab::braid::Word b(
      strands, parse_positive_indices(fetch_line(word2_flag, source, "word2"), 1));

  const smlab::braid::BraidVerdict verdict =
      smlab::braid::sublinear_braid_inequality_test(a, b);

  ordered_json out;
  out["verdict"] = verdict.kind == smlab::braid::BraidVerdictKind::NotEqual
                       ? "NotEqual"
                       : "Inconclusive";
  out["k"] = verdict.pattern_k;
  out["letters_read"] = verdict.letters_read;
  if (!quiet) {
    ordered_json config;
    config["subcommand"] = "braid-test";
    config["strands"] = strands;
    out["config"] = config;
  }
  emit_json(out);
  return verdict.kind == smlab::braid::BraidVerdictKind::NotEqual ? kExitSuccess
                                                                  : kExitInconclusive;
}

int run_braid_profile(int m_max, int strands, const FormatOpt& fmt, bool quiet) {
  if (m_max < 1) throw UsageError("--m-max must be >= 1");
  const std::vector<smlab::braid::ProfileRow> rows =
      smlab::braid::staircase_length_profile(m_max, strands);

  if (fmt.value == "json") {
    ordered_json out;
    ordered_json json_rows = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json r;
      r["m"] = row.m;
      r["len_u"] = row.len_u;
      r["len_v"] = row.len_v;
      r["steps"] = row.steps;
      json_rows.push_back(r);
    }
    out["rows"] = json_rows;
    if (!quiet) {
      ordered_json config;
      config["subcommand"] = "braid-profile";
      config["m_max"] = m_max;
      config["strands"] = strands;
      out["config"] = config;
    }
    emit_json(out);
    return kExitSuccess;
  }

  std::string body = "m,len_u,len_v,steps\n";
  for (const auto& row : rows) {
    body += std::to_string(row.m) + ',' + std::to_string(row.len_u) + ',' +
            std::to_string(row.len_v) + ',' + std::to_string(row.steps) + '\n';
  }
  emit_csv({{"subcommand", "braid-profile"},
            {"m_max", std::to_string(m_max)},
            {"strands", std::to_string(strands)}},
           body, quiet);
  return kExitSuccess;
}

int run_density_sweep(const std::string& tester_name, int rank, double delta,
                      int strands, const std::vector<std::size_t>& lengths,
                      std::size_t samples, std::uint64_t seed, const FormatOpt& fmt,
                      bool quiet) {
  if (samples == 0) throw UsageError("--samples must be >= 1");
  smlab::genericity::Tester tester;
  std::vector<std::pair<std::string, std::string>> config;
  if (tester_name == "whitehead") {
    if (rank < 2) throw UsageError("--rank must be >= 2");
    if (!(delta > 0.0 && delta < 1.0)) {
      throw UsageError("--delta must lie strictly between 0 and 1");
    }
    tester = smlab::genericity::whitehead_tester(smlab::Alphabet{rank}, delta);
    config = {{"rank", std::to_string(rank)}, {"delta", std::to_string(delta)}};
  } else {
    if (strands < 2) throw UsageError("--strands must be >= 2");
    tester = smlab::genericity::braid_pair_tester(strands);
    config = {{"strands", std::to_string(strands)}};
  }

  const smlab::genericity::SweepReport report = smlab::genericity::density_sweep(
      tester, tester_name, lengths, samples, seed, config);

  if (fmt.value == "json") {
    ordered_json out;
    out["tester"] = report.tester;
    out["seed"] = report.seed;
    ordered_json rows = ordered_json::array();
    for (const auto& est : report.rows) {
      ordered_json r;
      r["n"] = est.n;
      r["samples"] = est.samples;
      r["successes"] = est.successes;
      r["rate"] = est.rate;
      r["ci_low"] = est.ci_low;
      r["ci_high"] = est.ci_high;
      r["letters_read_min"] = est.letters_read_min;
      r["letters_read_mean"] = est.letters_read_mean;
      r["letters_read_max"] = est.letters_read_max;
      rows.push_back(r);
    }
    out["rows"] = rows;
    if (!quiet) {
      ordered_json cfg;
      cfg["subcommand"] = "density-sweep";
      for (const auto& [key, value] : report.config) cfg[key] = value;
      cfg["samples"] = samples;
      out["config"] = cfg;
    }
    emit_json(out);
    return kExitSuccess;
  }

  std::vector<std::pair<std::string, std::string>> comments = {
      {"subcommand", "density-sweep"}, {"tester", tester_name}};
  comments.insert(comments.end(), report.config.begin(), report.config.end());
  comments.push_back({"samples", std::to_string(samples)});
  comments.push_back({"seed", std::to_string(seed)});
  emit_csv(comments, smlab::genericity::to_csv(report), quiet);
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sublinear property testers for free groups and positive monoids"};
  app.require_subcommand(1);

  // Shared option storage; each subcommand registers only what it uses.
  int rank = 2;
  int cls = 2;
  int strands = 4;
  int m_max = 3;
  int profile_strands = 0;
  double delta = 0.6;
  std::uint64_t seed_flag = 0;
  std::size_t length = 0;
  std::size_t samples = 100;
  std::vector<std::size_t> lengths = {100, 1000, 10000};
  std::string word_flag, word2_flag, input_path, tester_name = "whitehead";
  bool dump_grid = false;
  bool quiet = false;
  FormatOpt profile_fmt, sweep_fmt;

  const auto add_quiet = [&](CLI::App* cmd) {
    cmd->add_flag("--quiet", quiet, "Suppress the config echo in the output");
  };
  const auto add_word_opts = [&](CLI::App* cmd, bool two_words) {
    cmd->add_option("--word", word_flag, "First word (textual format)");
    if (two_words) cmd->add_option("--word2", word2_flag, "Second word");
    cmd->add_option("--input", input_path, "Read words from this file, one per line");
  };

  CLI::App* whitehead_test =
      app.add_subcommand("whitehead-test", "Sublinear non-primitivity test");
  whitehead_test->add_option("--rank", rank, "Free group rank")->capture_default_str();
  whitehead_test->add_option("--delta", delta, "Sampling exponent in (0, 1)")
      ->capture_default_str();
  CLI::Option* wt_seed =
      whitehead_test->add_option("--seed", seed_flag, "RNG seed (SMLAB_SEED fallback)");
  whitehead_test->add_option(
      "--length", length, "Sample a random reduced word of this length instead");
  add_word_opts(whitehead_test, false);
  add_quiet(whitehead_test);

  CLI::App* whitehead_full =
      app.add_subcommand("whitehead-full", "Whole-word non-primitivity certifier");
  whitehead_full->add_option("--rank", rank, "Free group rank")->capture_default_str();
  CLI::Option* wf_seed =
      whitehead_full->add_option("--seed", seed_flag, "RNG seed (SMLAB_SEED fallback)");
  whitehead_full->add_option(
      "--length", length, "Sample a random reduced word of this length instead");
  add_word_opts(whitehead_full, false);
  add_quiet(whitehead_full);

  CLI::App* mc_equal = app.add_subcommand(
      "mc-equal", "Equality in the free nilpotent quotient of a given class");
  mc_equal->add_option("--class", cls, "Nilpotency class")->capture_default_str();
  add_word_opts(mc_equal, true);
  add_quiet(mc_equal);

  CLI::App* malcev = app.add_subcommand(
      "malcev", "Doubling sequence and common-multiple witness");
  malcev->add_option("--class", cls, "Nilpotency class")->capture_default_str();
  add_word_opts(malcev, true);
  add_quiet(malcev);

  CLI::App* thompson_fill =
      app.add_subcommand("thompson-fill", "Grid common multiple of positive words");
  thompson_fill->add_flag("--dump-grid", dump_grid, "Include the full label matrix");
  add_word_opts(thompson_fill, true);
  add_quiet(thompson_fill);

  CLI::App* thompson_nf =
      app.add_subcommand("thompson-nf", "Normal form of a (signed) word");
  add_word_opts(thompson_nf, false);
  add_quiet(thompson_nf);

  CLI::App* braid_reverse =
      app.add_subcommand("braid-reverse", "Subword reversing completion");
  braid_reverse->add_option("--strands", strands, "Strand count")->capture_default_str();
  add_word_opts(braid_reverse, true);
  add_quiet(braid_reverse);

  CLI::App* braid_test =
      app.add_subcommand("braid-test", "Sublinear braid inequality test");
  braid_test->add_option("--strands", strands, "Strand count")->capture_default_str();
  add_word_opts(braid_test, true);
  add_quiet(braid_test);

  CLI::App* braid_profile =
      app.add_subcommand("braid-profile", "Reversing lengths of the staircase pairs");
  braid_profile->add_option("--m-max", m_max, "Largest staircase parameter")
      ->capture_default_str();
  braid_profile->add_option("--strands", profile_strands,
                            "Strand count (0 = minimal per row)")
      ->capture_default_str();
  add_format_option(braid_profile, profile_fmt, "csv");
  add_quiet(braid_profile);

  CLI::App* density_sweep =
      app.add_subcommand("density-sweep", "Success-density estimates over lengths");
  density_sweep->add_option("--tester", tester_name, "whitehead or braid")
      ->check(CLI::IsMember({"whitehead", "braid"}))
      ->capture_default_str();
  density_sweep->add_option("--rank", rank, "Free group rank")->capture_default_str();
  density_sweep->add_option("--delta", delta, "Sampling exponent")->capture_default_str();
  density_sweep->add_option("--strands", strands, "Strand count")->capture_default_str();
  density_sweep->add_option("--lengths", lengths, "Input sizes, strictly increasing")
      ->delimiter(',')
      ->capture_default_str();
  density_sweep->add_option("--samples", samples, "Trials per length")
      ->capture_default_str();
  CLI::Option* ds_seed =
      density_sweep->add_option("--seed", seed_flag, "Master seed (SMLAB_SEED fallback)");
  add_format_option(density_sweep, sweep_fmt, "csv");
  add_quiet(density_sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (whitehead_test->parsed()) {
      return run_whitehead(true, rank, delta, resolve_seed(wt_seed, seed_flag), length,
                           word_flag, input_path, quiet);
    }
    if (whitehead_full->parsed()) {
      return run_whitehead(false, rank, delta, resolve_seed(wf_seed, seed_flag), length,
                           word_flag, input_path, quiet);
    }
    if (mc_equal->parsed()) {
      return run_mc_equal(cls, word_flag, word2_flag, input_path, quiet);
    }
    if (malcev->parsed()) {
      return run_malcev(cls, word_flag, word2_flag, input_path, quiet);
    }
    if (thompson_fill->parsed()) {
      return run_thompson_fill(word_flag, word2_flag, input_path, dump_grid, quiet);
    }
    if (thompson_nf->parsed()) {
      return run_thompson_nf(word_flag, input_path, quiet);
    }
    if (braid_reverse->parsed()) {
      return run_braid_reverse(strands, word_flag, word2_flag, input_path, quiet);
    }
    if (braid_test->parsed()) {
      return run_braid_test(strands, word_flag, word2_flag, input_path, quiet);
    }
    if (braid_profile->parsed()) {
      return run_braid_profile(m_max, profile_strands, profile_fmt, quiet);
    }
    if (density_sweep->parsed()) {
      return run_density_sweep(tester_name, rank, delta, strands, lengths, samples,
                               resolve_seed(ds_seed, seed_flag), sweep_fmt, quiet);
    }
  } catch (const smlab::ParseError& e) {
    std::cerr << "smlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "smlab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const smlab::BudgetError& e) {
    // A blown work budget is reported as an inconclusive outcome, not a
    // usage error: the inputs were valid but the answer was not reached.
    ordered_json out;
    out["error"] = e.what();
    emit_json(out);
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "smlab: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
