#ifndef LGQ_H
#define LGQ_H

/*
 * C interface to the exact verification engine for the quantum Clifford
 * algebra of the Lagrangian Grassmannian LG(2,4).
 *
 * The engine derives, over the field of rational functions in q, the braiding
 * on the tensor square of the adjoint module of quantized sl2, the quantum
 * exterior algebras it cuts out, the invariant dual pairing and inner
 * products, and the contraction operators Gamma_+, Gamma_0, Gamma_- together
 * with their adjoints. Commands replay parts of that derivation and render a
 * deterministic report; the check command decides whether the contractions
 * and their adjoints can satisfy quadratic exchange relations.
 *
 * All computation is exact; no floating point is involved anywhere.
 */

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque engine handle. One handle caches the derivation pipeline between
 * runs. A handle must not be used from two threads at once; independent
 * handles are fully independent. */
typedef struct lgq_engine lgq_engine;

typedef enum lgq_status {
  LGQ_OK = 0,                /* run completed with the expected outcome */
  LGQ_ERROR = 1,             /* internal failure; see lgq_last_error */
  LGQ_UNEXPECTED_RESULT = 2, /* run completed but contradicted the frozen
                              * expectation (or a structural check failed);
                              * a report is still produced */
  LGQ_BAD_ARGUMENT = 3,      /* unknown command, wrong option combination,
                              * nonpositive or out-of-range value */
  LGQ_PARSE_ERROR = 4,       /* malformed rational or scalar text */
  LGQ_POLE = 5               /* a specialization hit a vanishing denominator */
} lgq_status;

/* Options for lgq_run. Zero-initialize and set the fields you need; a NULL
 * pointer means "all defaults". */
typedef struct lgq_options {
  /* Specialize q to this positive rational, e.g. "1" or "3/4".
   * NULL keeps q symbolic. */
  const char* at_q;
  /* Restrict the check command to one contraction pair, written as the two
   * weight labels separated by a comma: "+1", "1", "0", or "-1" each.
   * Example: "-1,0" checks Gamma_- against Gamma_0^*. NULL checks every
   * ordered pair. Only meaningful for "check-parthasarathy". */
  const char* pair;
  /* One extra scale assignment "c0,c1,c2,c3" of positive rationals to scan
   * in the check command. NULL scans nothing. */
  const char* scales;
  /* Nonzero renders the machine-readable JSON report instead of plain text. */
  int json;
  /* Nonzero makes the "clifford" command run the structural verifier and
   * gate the exit code on it. */
  int structure_check;
} lgq_options;

/* Library version as a static string, e.g. "0.1.0". */
const char* lgq_version(void);

/* Create an engine. Returns NULL only on allocation failure. */
lgq_engine* lgq_engine_new(void);

/* Destroy an engine and everything it cached. NULL is allowed. */
void lgq_engine_free(lgq_engine* engine);

/* Message for the most recent failure on this engine, or "" if the last call
 * succeeded. The pointer stays valid until the next call on the engine. */
const char* lgq_last_error(const lgq_engine* engine);

/* Run one command and render its report.
 *
 * Commands: "braiding", "exterior", "pairing", "clifford",
 * "check-parthasarathy", "reproduce-paper".
 *
 * On LGQ_OK and LGQ_UNEXPECTED_RESULT, *report_out receives the rendered
 * report (free with lgq_string_free) and *exit_code_out the suggested
 * process exit code: 0 expected outcome, 2 unexpected check outcome,
 * 1 failed structural verification. Identical inputs yield byte-identical
 * reports. Either out pointer may be NULL. On any other status no report is
 * produced and the outputs are untouched. */
lgq_status lgq_run(lgq_engine* engine, const char* command, const lgq_options* options,
                   char** report_out, int* exit_code_out);

/* Parse scalar text in the canonical grammar and re-emit its canonical form,
 * e.g. "q^2-q^-2" -> "q^2 - q^-2". This is the round-trip contract for every
 * scalar value appearing in JSON reports. *canonical_out must be freed with
 * lgq_string_free. */
lgq_status lgq_scalar_roundtrip(lgq_engine* engine, const char* text, char** canonical_out);

/* Free a string returned by this library. NULL is allowed. */
void lgq_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* LGQ_H */
