#ifndef ORBCOH_H
#define ORBCOH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OrbcohCommand {
  ORBCOH_COMMAND_SECTORS = 0,
  ORBCOH_COMMAND_COHOMOLOGY = 1,
  ORBCOH_COMMAND_RING = 2,
  ORBCOH_COMMAND_VERIFY = 3,
} OrbcohCommand;

typedef enum OrbcohFormat {
  ORBCOH_FORMAT_TABLE = 0,
  ORBCOH_FORMAT_JSON = 1,
} OrbcohFormat;

/**
 * Result of every fallible call.
 */
typedef enum OrbcohStatus {
  ORBCOH_STATUS_OK = 0,
  ORBCOH_STATUS_NULL_POINTER = 1,
  ORBCOH_STATUS_INVALID_UTF8 = 2,
  /**
   * The document does not parse or violates the input schema.
   */
  ORBCOH_STATUS_SCHEMA = 3,
  /**
   * The presentation or atlas is mathematically inconsistent.
   */
  ORBCOH_STATUS_INVALID = 4,
  /**
   * An Euler oracle entry was rejected.
   */
  ORBCOH_STATUS_ORACLE = 5,
  /**
   * The report was produced but some structural check failed.
   */
  ORBCOH_STATUS_VERIFICATION_FAILED = 6,
  /**
   * The report was produced but some products need Euler oracle values.
   */
  ORBCOH_STATUS_INCOMPLETE = 7,
  ORBCOH_STATUS_INTERNAL = 8,
} OrbcohStatus;

/**
 * An atlas together with the Euler oracle entries attached to it.
 */
typedef struct OrbcohAtlas OrbcohAtlas;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a TOML or JSON input document (detected from its content) into a
 * new atlas handle written to `*out`. Inline Euler oracle entries are kept.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum OrbcohStatus orbcoh_atlas_from_str(const char *text, struct OrbcohAtlas **out);

/**
 * Merges the entries of an Euler oracle document into the atlas's oracle.
 *
 * # Safety
 * `atlas` must come from [`orbcoh_atlas_from_str`]; `text` must be a valid
 * NUL-terminated string.
 */
enum OrbcohStatus orbcoh_atlas_add_oracle(struct OrbcohAtlas *atlas, const char *text);

/**
 * # Safety
 * `atlas` must come from [`orbcoh_atlas_from_str`] and not be used afterwards.
 */
void orbcoh_atlas_free(struct OrbcohAtlas *atlas);

/**
 * Number of twisted sectors including the untwisted one; 0 for a null handle.
 *
 * # Safety
 * `atlas` must be null or come from [`orbcoh_atlas_from_str`].
 */
size_t orbcoh_atlas_sector_count(const struct OrbcohAtlas *atlas);

/**
 * # Safety
 * `atlas` must be null or come from [`orbcoh_atlas_from_str`].
 */
size_t orbcoh_atlas_multisector_count(const struct OrbcohAtlas *atlas);

/**
 * # Safety
 * `atlas` must be null or come from [`orbcoh_atlas_from_str`].
 */
uint32_t orbcoh_atlas_ambient_dim(const struct OrbcohAtlas *atlas);

/**
 * Renders a report into a new string written to `*out`.
 *
 * `VerificationFailed` and `Incomplete` still produce the report; any other
 * non-`Ok` status leaves `*out` null.
 *
 * # Safety
 * `atlas` must come from [`orbcoh_atlas_from_str`] and `out` be a valid pointer.
 */
enum OrbcohStatus orbcoh_report(const struct OrbcohAtlas *atlas,
                                enum OrbcohCommand command,
                                enum OrbcohFormat format,
                                char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void orbcoh_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *orbcoh_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORBCOH_H */
