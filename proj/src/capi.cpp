#include "nfrob.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "frobenius.hpp"
#include "report.hpp"
#include "spec_io.hpp"

// Opaque handle: an immutable algebra plus its ring name for cheap access.
struct nf_algebra {
  nfrob::Algebra algebra;
  std::string ring_name;
};

namespace {

thread_local std::string g_last_error;

nf_status status_of(nfrob::ErrorCode code) {
  using nfrob::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError: return NF_ERROR_PARSE;
    case ErrorCode::ValidationError: return NF_ERROR_VALIDATION;
    case ErrorCode::WrongRing: return NF_ERROR_WRONG_RING;
    case ErrorCode::DimensionMismatch: return NF_ERROR_DIMENSION_MISMATCH;
    case ErrorCode::Singular: return NF_ERROR_SINGULAR;
    case ErrorCode::NotUnimodular: return NF_ERROR_NOT_UNIMODULAR;
    case ErrorCode::NotCentral: return NF_ERROR_NOT_CENTRAL;
    case ErrorCode::NoSolution: return NF_ERROR_NO_SOLUTION;
    case ErrorCode::InfiniteDimensional: return NF_ERROR_INFINITE_DIMENSIONAL;
    case ErrorCode::LimitExceeded: return NF_ERROR_LIMIT_EXCEEDED;
    case ErrorCode::NotPrime: return NF_ERROR_NOT_PRIME;
    case ErrorCode::DeterministicTooLarge:
      return NF_ERROR_DETERMINISTIC_TOO_LARGE;
    case ErrorCode::InvalidArgument: return NF_ERROR_INVALID_ARGUMENT;
    case ErrorCode::Internal: return NF_ERROR_INTERNAL;
  }
  return NF_ERROR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
nf_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return NF_OK;
  } catch (const nfrob::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NF_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return NF_ERROR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* nf_version(void) { return "0.1.0"; }

const char* nf_status_name(nf_status status) {
  switch (status) {
    case NF_OK: return "NF_OK";
    case NF_ERROR_PARSE: return "NF_ERROR_PARSE";
    case NF_ERROR_VALIDATION: return "NF_ERROR_VALIDATION";
    case NF_ERROR_WRONG_RING: return "NF_ERROR_WRONG_RING";
    case NF_ERROR_DIMENSION_MISMATCH: return "NF_ERROR_DIMENSION_MISMATCH";
    case NF_ERROR_SINGULAR: return "NF_ERROR_SINGULAR";
    case NF_ERROR_NOT_UNIMODULAR: return "NF_ERROR_NOT_UNIMODULAR";
    case NF_ERROR_NOT_CENTRAL: return "NF_ERROR_NOT_CENTRAL";
    case NF_ERROR_NO_SOLUTION: return "NF_ERROR_NO_SOLUTION";
    case NF_ERROR_INFINITE_DIMENSIONAL: return "NF_ERROR_INFINITE_DIMENSIONAL";
    case NF_ERROR_LIMIT_EXCEEDED: return "NF_ERROR_LIMIT_EXCEEDED";
    case NF_ERROR_NOT_PRIME: return "NF_ERROR_NOT_PRIME";
    case NF_ERROR_DETERMINISTIC_TOO_LARGE:
      return "NF_ERROR_DETERMINISTIC_TOO_LARGE";
    case NF_ERROR_INVALID_ARGUMENT: return "NF_ERROR_INVALID_ARGUMENT";
    case NF_ERROR_INTERNAL: return "NF_ERROR_INTERNAL";
  }
  return "NF_ERROR_INTERNAL";
}

const char* nf_last_error(void) { return g_last_error.c_str(); }

nf_status nf_algebra_from_json(const char* json_text, nf_algebra** out) {
  if (!json_text || !out) {
    g_last_error = "null argument";
    return NF_ERROR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    nfrob::Algebra a = nfrob::parse_spec(json_text);
    *out = new nf_algebra{std::move(a), std::string()};
    (*out)->ring_name = (*out)->algebra.ring().name();
  });
}

nf_status nf_algebra_from_file(const char* path, nf_algebra** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return NF_ERROR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    nfrob::Algebra a = nfrob::parse_spec_file(path);
    *out = new nf_algebra{std::move(a), std::string()};
    (*out)->ring_name = (*out)->algebra.ring().name();
  });
}

void nf_algebra_free(nf_algebra* a) { delete a; }

int64_t nf_algebra_dim(const nf_algebra* a) {
  return a ? static_cast<int64_t>(a->algebra.dim()) : 0;
}

const char* nf_algebra_ring(const nf_algebra* a) {
  return a ? a->ring_name.c_str() : "";
}

nf_status nf_frobdim(const nf_algebra* a, int64_t* out) {
  if (!a || !out) {
    g_last_error = "null argument";
    return NF_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    *out = static_cast<int64_t>(nfrob::frobdim(a->algebra));
  });
}

nf_status nf_central_basis_json(const nf_algebra* a, char** out) {
  if (!a || !out) {
    g_last_error = "null argument";
    return NF_ERROR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    nfrob::FrobeniusSpace space = nfrob::central_basis(a->algebra);
    std::string json = "[";
    for (std::size_t i = 0; i < space.generators.size(); ++i) {
      if (i) json += ",";
      json += nfrob::render_matrix(space.generators[i].coeffs);
    }
    json += "]";
    *out = dup_string(json);
  });
}

nf_status nf_is_central_json(const nf_algebra* a, const char* tensor_json,
                             int* out) {
  if (!a || !tensor_json || !out) {
    g_last_error = "null argument";
    return NF_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    nfrob::Tensor2 t =
        nfrob::parse_tensor2(a->algebra.ring(), tensor_json);
    *out = nfrob::is_central(a->algebra, t) ? 1 : 0;
  });
}

nf_status nf_run_command(const char* command, const char* spec_json,
                         const char* flags_json, char** out_report) {
  if (!command || !spec_json || !out_report) {
    g_last_error = "null argument";
    return NF_ERROR_INVALID_ARGUMENT;
  }
  *out_report = nullptr;
  return guarded([&] {
    nfrob::CommandOptions opts =
        nfrob::options_from_json(flags_json ? flags_json : "");
    nlohmann::json report = nfrob::run_command(command, spec_json, opts);
    *out_report = dup_string(report.dump(2));
  });
}

nf_status nf_run_command_file(const char* command, const char* spec_path,
                              const char* flags_json, char** out_report) {
  if (!command || !spec_path || !out_report) {
    g_last_error = "null argument";
    return NF_ERROR_INVALID_ARGUMENT;
  }
  *out_report = nullptr;
  nf_status status = NF_OK;
  std::string text;
  status = guarded([&] { text = nfrob::read_file(spec_path); });
  if (status != NF_OK) return status;
  return nf_run_command(command, text.c_str(), flags_json, out_report);
}

void nf_string_free(char* s) { std::free(s); }

}  // extern "C"
