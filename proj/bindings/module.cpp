#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "smlab/braid.hpp"
#include "smlab/genericity.hpp"
#include "smlab/nilpotent.hpp"
#include "smlab/thompson.hpp"
#include "smlab/whitehead.hpp"
#include "smlab/words.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py_int(const smlab::nilpotent::BigInt& value) {
  const std::string digits = value.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
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

py::dict whitehead_dict(const smlab::whitehead::PrimitivityVerdict& v) {
  py::dict out;
  out["verdict"] = verdict_name(v.kind);
  out["certificate_kind"] = certificate_name(v.certificate);
  out["letters_read"] = v.letters_read;
  out["cancellation_depth"] = v.cancellation_depth;
  out["window_start"] = v.window_start;
  out["window_length"] = v.window_length;
  return out;
}

py::dict density_dict(const smlab::genericity::DensityEstimate& est) {
  py::dict out;
  out["n"] = est.n;
  out["samples"] = est.samples;
  out["successes"] = est.successes;
  out["rate"] = est.rate;
  out["ci_low"] = est.ci_low;
  out["ci_high"] = est.ci_high;
  out["letters_read_min"] = est.letters_read_min;
  out["letters_read_mean"] = est.letters_read_mean;
  out["letters_read_max"] = est.letters_read_max;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sublinear property testers for free groups and positive monoids";

  m.def(
      "free_reduce",
      [](const std::vector<int>& signed_letters) {
        return smlab::free_reduce(smlab::Word::from_signed(signed_letters)).to_signed();
      },
      py::arg("word"),
      "Freely reduce a word given as signed generator indices.");

  m.def(
      "cyclic_reduce",
      [](const std::vector<int>& signed_letters) {
        const smlab::CyclicReduction cr =
            smlab::cyclic_reduce(smlab::Word::from_signed(signed_letters));
        return py::make_tuple(cr.core.to_signed(), cr.conjugator.to_signed());
      },
      py::arg("word"),
      "Split a freely reduced word as conjugator * core * conjugator^-1.");

  m.def(
      "random_reduced_word",
      [](int rank, std::size_t length, std::uint64_t seed) {
        smlab::Rng rng = smlab::make_rng(seed);
        return smlab::random_reduced_word(smlab::Alphabet{rank}, length, rng)
            .to_signed();
      },
      py::arg("rank"), py::arg("length"), py::arg("seed"),
      "Uniform freely reduced word of the given length.");

  m.def(
      "abelianization",
      [](const std::vector<int>& signed_letters, int rank) {
        return smlab::abelianization(smlab::Word::from_signed(signed_letters),
                                     smlab::Alphabet{rank});
      },
      py::arg("word"), py::arg("rank"),
      "Exponent-sum vector of a word.");

  m.def(
      "whitehead_full",
      [](const std::vector<int>& signed_letters, int rank) {
        const auto verdict = smlab::whitehead::certify_nonprimitive_full(
            smlab::Word::from_signed(signed_letters), smlab::Alphabet{rank});
        return whitehead_dict(verdict);
      },
      py::arg("word"), py::arg("rank"),
      "Whole-word non-primitivity certifier.");

  m.def(
      "whitehead_sublinear",
      [](const std::vector<int>& signed_letters, int rank, double delta,
         std::uint64_t seed) {
        smlab::Rng rng = smlab::make_rng(seed);
        const auto verdict = smlab::whitehead::sublinear_nonprimitivity_test(
            smlab::Word::from_signed(signed_letters), smlab::Alphabet{rank}, delta,
            rng);
        return whitehead_dict(verdict);
      },
      py::arg("word"), py::arg("rank"), py::arg("delta"), py::arg("seed"),
      "Sublinear non-primitivity test on a freely reduced word.");

  m.def(
      "mc_equal",
      [](const std::vector<int>& w1, const std::vector<int>& w2, int c) {
        const smlab::nilpotent::McResult result = smlab::nilpotent::mc_equal_detail(
            smlab::PositiveWord(w1), smlab::PositiveWord(w2), c);
        py::dict out;
        out["equal"] = result.equal;
        out["first_discrepant_monomial"] =
            result.first_discrepant_monomial
                ? py::object(py::cast(result.first_discrepant_monomial->indices))
                : py::object(py::none());
        out["degrees_checked"] = result.degrees_checked;
        return out;
      },
      py::arg("w1"), py::arg("w2"), py::arg("c"),
      "Equality of positive words in the free nilpotent quotient of class c.");

  m.def(
      "magnus_coefficient",
      [](const std::vector<int>& w, const std::vector<int>& monomial) {
        const int degree = static_cast<int>(monomial.size());
        const smlab::nilpotent::MagnusSeries series =
            smlab::nilpotent::magnus_truncated(smlab::PositiveWord(w), degree);
        return to_py_int(series.coefficient(smlab::nilpotent::Monomial{monomial}));
      },
      py::arg("word"), py::arg("monomial"),
      "Exact scattered-subsequence count: the series coefficient of the "
      "monomial (a list of 1-based generator indices).");

  m.def(
      "malcev_sequence",
      [](const std::vector<int>& w1, const std::vector<int>& w2, int c) {
        const smlab::nilpotent::MalcevPair pair = smlab::nilpotent::malcev_sequence(
            smlab::PositiveWord(w1), smlab::PositiveWord(w2), c);
        py::dict out;
        out["u"] = pair.u.letters();
        out["v"] = pair.v.letters();
        out["stage"] = pair.stage;
        return out;
      },
      py::arg("w1"), py::arg("w2"), py::arg("c"),
      "Doubling sequence whose stage-c words agree in class c.");

  m.def(
      "common_multiple_witness",
      [](const std::vector<int>& w1, const std::vector<int>& w2, int c) {
        const auto witness = smlab::nilpotent::common_multiple_witness(
            smlab::PositiveWord(w1), smlab::PositiveWord(w2), c);
        return py::make_tuple(witness.z1.letters(), witness.z2.letters());
      },
      py::arg("w1"), py::arg("w2"), py::arg("c"),
      "Words (z1, z2) with w1 z1 = w2 z2 in the class-c quotient.");

  m.def(
      "thompson_grid_fill",
      [](const std::vector<int>& w1, const std::vector<int>& w2) {
        const smlab::thompson::GridFill fill = smlab::thompson::grid_fill(w1, w2);
        return py::make_tuple(fill.z1, fill.z2);
      },
      py::arg("w1"), py::arg("w2"),
      "Common right multiple of positive words: returns (z1, z2) with "
      "w1 z1 = w2 z2.");

  m.def(
      "thompson_normal_form",
      [](const std::vector<std::pair<int, int>>& letters) {
        std::vector<smlab::thompson::Letter> word;
        word.reserve(letters.size());
        for (const auto& [index, sign] : letters) {
          word.push_back(smlab::thompson::Letter{index, sign});
        }
        const smlab::thompson::TNormalForm nf =
            smlab::thompson::normal_form(smlab::thompson::Word(std::move(word)));
        return py::make_tuple(nf.positive_part, nf.negative_part);
      },
      py::arg("letters"),
      "Normal form of a word given as (index, sign) pairs; returns the "
      "positive and negative index arrays.");

  m.def(
      "braid_reverse",
      [](int strands, const std::vector<int>& w1, const std::vector<int>& w2) {
        const smlab::braid::ReversingResult result = smlab::braid::subword_reversing(
            smlab::braid::Word(strands, w1), smlab::braid::Word(strands, w2));
        py::dict out;
        out["u"] = result.u.letters();
        out["v"] = result.v.letters();
        out["steps"] = result.steps;
        out["max_intermediate_length"] = result.max_intermediate_length;
        return out;
      },
      py::arg("strands"), py::arg("w1"), py::arg("w2"),
      "Subword reversing completion: w1 u = w2 v in the positive braid monoid.");

  m.def(
      "braid_test",
      [](int strands, const std::vector<int>& a, const std::vector<int>& b) {
        const smlab::braid::BraidVerdict verdict =
            smlab::braid::sublinear_braid_inequality_test(
                smlab::braid::Word(strands, a), smlab::braid::Word(strands, b));
        py::dict out;
        out["verdict"] = verdict.kind == smlab::braid::BraidVerdictKind::NotEqual
                             ? "NotEqual"
                             : "Inconclusive";
        out["k"] = verdict.pattern_k;
        out["letters_read"] = verdict.letters_read;
        return out;
      },
      py::arg("strands"), py::arg("a"), py::arg("b"),
      "Sublinear inequality test for positive braid words.");

  m.def(
      "braid_equal",
      [](int strands, const std::vector<int>& a, const std::vector<int>& b) {
        return smlab::braid::bruteforce_braid_equal(smlab::braid::Word(strands, a),
                                                    smlab::braid::Word(strands, b));
      },
      py::arg("strands"), py::arg("a"), py::arg("b"),
      "Exact equality by closure under the braid relations.");

  m.def(
      "braid_profile",
      [](int m_max, int strands) {
        py::list rows;
        for (const auto& row : smlab::braid::staircase_length_profile(m_max, strands)) {
          py::dict r;
          r["m"] = row.m;
          r["len_u"] = row.len_u;
          r["len_v"] = row.len_v;
          r["steps"] = row.steps;
          rows.append(r);
        }
        return rows;
      },
      py::arg("m_max"), py::arg("strands") = 0,
      "Reversing lengths of the staircase pairs m = 1..m_max.");

  m.def(
      "wilson95",
      [](std::size_t successes, std::size_t samples) {
        const auto [low, high] = smlab::genericity::wilson95(successes, samples);
        return py::make_tuple(low, high);
      },
      py::arg("successes"), py::arg("samples"),
      "Wilson 95% confidence interval for a binomial rate.");

  m.def(
      "whitehead_density",
      [](std::size_t n, std::size_t samples, std::uint64_t seed, int rank,
         double delta) {
        const auto tester =
            smlab::genericity::whitehead_tester(smlab::Alphabet{rank}, delta);
        return density_dict(
            smlab::genericity::estimate_success_density(tester, n, samples, seed));
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("rank") = 2,
      py::arg("delta") = 0.6,
      "Success density of the sublinear non-primitivity test at length n.");

  m.def(
      "braid_density",
      [](std::size_t n, std::size_t samples, std::uint64_t seed, int strands) {
        const auto tester = smlab::genericity::braid_pair_tester(strands);
        return density_dict(
            smlab::genericity::estimate_success_density(tester, n, samples, seed));
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("strands") = 4,
      "Success density of the braid inequality test on random pairs.");
}
