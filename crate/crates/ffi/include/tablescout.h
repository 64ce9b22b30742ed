#ifndef TABLESCOUT_H
#define TABLESCOUT_H

#include <stddef.h>
#include <stdint.h>

typedef enum TsFeatureSet {
  TS_FEATURE_SET_NAM = 0,
  TS_FEATURE_SET_NAM_PTD = 1,
  TS_FEATURE_SET_ALL = 2,
} TsFeatureSet;

/*
 Result codes.
 */
typedef enum TsStatus {
  TS_STATUS_OK = 0,
  TS_STATUS_NULL_POINTER = 1,
  TS_STATUS_INVALID_UTF8 = 2,
  TS_STATUS_IO = 3,
  TS_STATUS_PARSE = 4,
  TS_STATUS_MODEL = 5,
  TS_STATUS_TRAIN = 6,
  TS_STATUS_OUT_OF_RANGE = 7,
  TS_STATUS_FEATURE = 8,
  TS_STATUS_INVALID_ARGUMENT = 9,
  TS_STATUS_PANIC = 99,
} TsStatus;

typedef enum TsVoter {
  TS_VOTER_ENSEMBLE = 0,
  TS_VOTER_LR = 1,
  TS_VOTER_SVM = 2,
  TS_VOTER_NB = 3,
} TsVoter;

/*
 Characters of one document.
 */
typedef struct TsDocument TsDocument;

/*
 Lines of one or more documents, in reading order.
 */
typedef struct TsLines TsLines;

/*
 A trained ensemble.
 */
typedef struct TsModel TsModel;

/*
 Eleven feature values of one line.
 */
typedef struct TsFeatureVector {
  double nam;
  /*
   NN, VB, JJ, RB, others.
   */
  double ptd[5];
  /*
   person, location, organization, number, time.
   */
  double nep[5];
} TsFeatureVector;

/*
 Undefined ratios are NaN.
 */
typedef struct TsMetrics {
  uint64_t tp;
  uint64_t fp;
  uint64_t fn_;
  uint64_t tn;
  double accuracy;
  double precision;
  double recall;
  double f1;
} TsMetrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or NULL. The pointer
 stays valid until the next call on the same thread.
 */
const char *ts_last_error(void);

/*
 Releases a string returned by this library. NULL is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void ts_string_free(char *s);

/*
 Opens a PDF or a characters JSONL file.

 # Safety
 `path` must be a NUL-terminated string and `out` writable.
 */
enum TsStatus ts_document_open(const char *path, struct TsDocument **out);

/*
 # Safety
 `doc` must be a live handle or NULL.
 */
size_t ts_document_page_count(const struct TsDocument *doc);

/*
 # Safety
 `doc` must be a live handle or NULL.
 */
size_t ts_document_char_count(const struct TsDocument *doc);

/*
 # Safety
 `doc` must come from [`ts_document_open`] and not have been freed.
 */
void ts_document_free(struct TsDocument *doc);

/*
 Groups a document's characters into lines with the default layout
 settings.

 # Safety
 `doc` must be a live handle and `out` writable.
 */
enum TsStatus ts_lines_from_document(const struct TsDocument *doc, struct TsLines **out);

/*
 Reads a lines JSONL file.

 # Safety
 `path` must be a NUL-terminated string and `out` writable.
 */
enum TsStatus ts_lines_read(const char *path, struct TsLines **out);

/*
 # Safety
 `lines` must be a live handle or NULL.
 */
size_t ts_lines_count(const struct TsLines *lines);

/*
 Text of line `i`, words joined by single spaces. Free the result with
 [`ts_string_free`].

 # Safety
 `lines` must be a live handle and `out` writable.
 */
enum TsStatus ts_lines_text(const struct TsLines *lines, size_t i, char **out);

/*
 All lines as JSONL. Free the result with [`ts_string_free`].

 # Safety
 `lines` must be a live handle and `out` writable.
 */
enum TsStatus ts_lines_to_jsonl(const struct TsLines *lines, char **out);

/*
 Feature vector of line `i` with the built-in taggers.

 # Safety
 `lines` must be a live handle and `out` writable.
 */
enum TsStatus ts_lines_features(const struct TsLines *lines, size_t i, struct TsFeatureVector *out);

/*
 # Safety
 `lines` must come from this library and not have been freed.
 */
void ts_lines_free(struct TsLines *lines);

/*
 Heuristic labels (1 table, -1 non-table) for every line. `labels` must
 hold `len` entries and `len` must equal the line count.

 # Safety
 `lines` must be a live handle and `labels` writable for `len` entries.
 */
enum TsStatus ts_baseline_predict(const struct TsLines *lines, int32_t *labels, size_t len);

/*
 Weak-labels `lines` around table captions and trains an ensemble on the
 result with default parameters.

 # Safety
 `lines` must be a live handle and `out` writable.
 */
enum TsStatus ts_model_train(const struct TsLines *lines,
                             enum TsFeatureSet features,
                             struct TsModel **out);

/*
 # Safety
 `path` must be a NUL-terminated string and `out` writable.
 */
enum TsStatus ts_model_load(const char *path, struct TsModel **out);

/*
 # Safety
 `model` must be a live handle and `path` a NUL-terminated string.
 */
enum TsStatus ts_model_save(const struct TsModel *model, const char *path);

/*
 Labels (1 table, -1 non-table) for every line. `len` must equal the
 line count.

 # Safety
 `model` and `lines` must be live handles and `labels` writable for
 `len` entries.
 */
enum TsStatus ts_model_predict(const struct TsModel *model,
                               const struct TsLines *lines,
                               enum TsVoter voter,
                               int32_t *labels,
                               size_t len);

/*
 Number of feature dimensions the model uses.

 # Safety
 `model` must be a live handle or NULL.
 */
size_t ts_model_dims(const struct TsModel *model);

/*
 # Safety
 `model` must come from this library and not have been freed.
 */
void ts_model_free(struct TsModel *model);

/*
 Confusion counts and metrics of `pred` against `gold`, both holding
 `len` labels of 1 or -1.

 # Safety
 `pred` and `gold` must be readable for `len` entries and `out` writable.
 */
enum TsStatus ts_metrics(const int32_t *pred,
                         const int32_t *gold,
                         size_t len,
                         struct TsMetrics *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TABLESCOUT_H */
