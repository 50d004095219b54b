/* C interface to the afschur library.
 *
 * All work goes through JSON request documents:
 *
 *   {"command": "schur-mul", "n": 2, "r": 3, "ring": "Z",
 *    "left": {...}, "right": {...}}
 *
 * afs_run_json fills *response with a NUL-terminated document (JSON with
 * sorted keys, or plain text when the request sets "format": "text") and
 * returns the outcome code: 0 success, 1 internal verification failure,
 * 2 contract violation (bad flags, malformed JSON, out-of-domain input).
 * The response buffer is owned by the caller; release it with afs_free.
 */
#ifndef AFSCHUR_H
#define AFSCHUR_H

#ifdef __cplusplus
extern "C" {
#endif

#define AFS_OK 0
#define AFS_INTERNAL 1
#define AFS_CONTRACT 2

typedef struct afs_session afs_session;

/* Create a session. Returns NULL only on allocation failure. */
afs_session* afs_session_new(void);
void afs_session_free(afs_session* s);

/* Run one request. response may be NULL if only the code is wanted.
 * A NULL session or request is a contract violation. */
int afs_run_json(afs_session* s, const char* request, char** response);

/* Message of the last failing call on this session, or "" if none. The
 * pointer stays valid until the next afs_run_json on the same session. */
const char* afs_last_error(const afs_session* s);

/* Release a buffer produced by afs_run_json. */
void afs_free(char* buf);

#ifdef __cplusplus
}
#endif

#endif /* AFSCHUR_H */
