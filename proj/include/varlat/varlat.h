#ifndef VARLAT_H
#define VARLAT_H

/*
 * C interface to the variety-lattice toolkit. All functions return a status
 * code; VARLAT_OK means success. On failure, varlat_last_error() returns a
 * thread-local message describing what went wrong. Strings produced through
 * char** out-parameters are owned by the caller and released with
 * varlat_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

enum {
  VARLAT_OK = 0,
  VARLAT_EINVAL = 1,
  VARLAT_EPARSE = 2,
  VARLAT_ENOTLATTICE = 3,
  VARLAT_ECYCLE = 4,
  VARLAT_EDEGREE = 5,
  VARLAT_EUNSUPPORTED = 6,
  VARLAT_EUNDECIDED = 7,
  VARLAT_ETOOLARGE = 8,
  VARLAT_EPRECONDITION = 9,
  VARLAT_EINTERNAL = 10
};

typedef struct varlat_lattice varlat_lattice;
typedef struct varlat_variety varlat_variety;

const char* varlat_version(void);
const char* varlat_status_name(int status);

/* Thread-local message for the most recent failing call on this thread. */
const char* varlat_last_error(void);
void varlat_string_free(char* text);

/*
 * Finite lattices. The JSON schema is
 *   {"elements": ["a", "b", ...], "covers": [["a", "b"], ...]}
 * where covers list (lower, upper) pairs of element names.
 */
int varlat_lattice_from_json(const char* json_text, varlat_lattice** out);
void varlat_lattice_free(varlat_lattice* l);
int varlat_lattice_to_json(const varlat_lattice* l, char** out_json);
int varlat_lattice_classify_json(const varlat_lattice* l, char** out_json);
int varlat_lattice_dot(const varlat_lattice* l, char** out_dot);

/* The lattice of all subgroups of S_degree (degree at most 5). */
int varlat_subgroups_json(int degree, char** out_json);
int varlat_subgroups_classify_json(int degree, char** out_json);
int varlat_subgroups_dot(int degree, char** out_dot);

/*
 * Checks the stored figure expectations for Sub(S_3) or Sub(S_4). The options
 * document may set {"fixtures_dir": "..."}; pass NULL for defaults. The report
 * carries "ok": false when an expectation is falsified; the return status is
 * VARLAT_OK either way.
 */
int varlat_subgroups_figure_json(int degree, const char* options_json,
                                 char** out_json);

/*
 * Variety handles: "T", "X:m,n", "Y:m,n" (n may be "inf"), "D:n:GENS" with
 * cycle-notation generators separated by ';', or "B:" followed by
 * ';'-separated identities for a raw basis.
 */
int varlat_variety_parse(const char* handle_text, varlat_variety** out);
void varlat_variety_free(varlat_variety* v);
int varlat_variety_to_string(const varlat_variety* v, char** out_text);

/* Decides whether the identity holds in the variety; writes 1 or 0. */
int varlat_variety_check(const varlat_variety* v, const char* identity_text,
                         int* out_holds);

int varlat_variety_join(const varlat_variety* a, const varlat_variety* b,
                        varlat_variety** out);
int varlat_variety_meet(const varlat_variety* a, const varlat_variety* b,
                        varlat_variety** out);

/* The permutations pi of S_k whose permutational identity holds in v. */
int varlat_variety_perm_group_json(const varlat_variety* v, int k, char** out_json);

/* The finite relatively free object of v on k generators (k at most 4). */
int varlat_variety_free_object_json(const varlat_variety* v, int k, char** out_json);

/* The family order truncated at the given index cap (3..8 useful range). */
int varlat_family_lattice_json(int cap, char** out_json);
int varlat_family_lattice_dot(int cap, char** out_dot);

/*
 * Runs a verification suite: figure1, prop31, lemma36, incomparability, or
 * oracles. The options document may set cap, degree, seed, depth, size,
 * max_len, letters, count, and fixtures_dir; pass NULL for defaults. As with
 * the figure check, a falsified expectation is reported in the payload, not
 * through the return status.
 */
int varlat_verify(const char* suite, const char* options_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* VARLAT_H */
