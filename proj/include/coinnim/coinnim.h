#ifndef COINNIM_COINNIM_H
#define COINNIM_COINNIM_H

/*
 * C interface to the coinnim engine: move generation, exact Grundy values,
 * closed-form classification, verification sweeps, table export, and the
 * HTTP service.
 *
 * Every function returning coinnim_status reports failure through the return
 * code; coinnim_last_error() then holds a message for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * coinnim_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define COINNIM_API __declspec(dllexport)
#else
#  define COINNIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum coinnim_status {
  COINNIM_OK = 0,
  COINNIM_ERR_INVALID_ARGUMENT = 1,
  COINNIM_ERR_MALFORMED_POSITION = 2,
  COINNIM_ERR_ILLEGAL_MOVE = 3,
  COINNIM_ERR_NOT_APPLICABLE = 4,
  COINNIM_ERR_IO = 5,
  COINNIM_ERR_MEMO_CAP = 6,
  COINNIM_ERR_BIND = 7,
  COINNIM_ERR_BUFFER_TOO_SMALL = 8,
  COINNIM_ERR_INTERNAL = 99
} coinnim_status;

typedef enum coinnim_variant {
  COINNIM_VARIANT_PUSH = 0,
  COINNIM_VARIANT_JUMP = 1,
  COINNIM_VARIANT_FREE = 2,
  COINNIM_VARIANT_ROOK = 3
} coinnim_variant;

typedef enum coinnim_push_rule {
  COINNIM_PUSH_SWEEP_BOTH_OFF = 0,
  COINNIM_PUSH_PUSHER_STOPS_AT_EDGE = 1
} coinnim_push_rule;

typedef struct coinnim_piece {
  int32_t col;
  int32_t row;
  int32_t dropped; /* nonzero: off the board, col/row ignored */
} coinnim_piece;

typedef struct coinnim_position {
  coinnim_variant variant;
  coinnim_piece pieces[2];
} coinnim_position;

typedef struct coinnim_move {
  int32_t piece;      /* 0 = A, 1 = B */
  int32_t direction;  /* 0 = left, 1 = up */
  int32_t off_board;  /* destination is off the board */
  int32_t col;
  int32_t row;
  int32_t has_push;
  int32_t push_off_board;
  int32_t push_col;
  int32_t push_row;
} coinnim_move;

typedef struct coinnim_classification {
  int32_t applicable;  /* zero for the free variant and dropped-piece states */
  int32_t nim_sum;     /* (w-1)^(x-1)^(y-1)^(z-1) for coins, x^y^z^w for rooks */
  int32_t in_p0;
  int32_t in_p1;
  int32_t in_n0;
  int32_t in_terminal_set;
  int32_t p_position;
} coinnim_classification;

typedef enum coinnim_check {
  COINNIM_CHECK_VARIANT = 0,        /* solver vs. closed form */
  COINNIM_CHECK_CORRESPONDENCE = 1, /* jump vs. shifted rook */
  COINNIM_CHECK_DROP_LOSING = 2,
  COINNIM_CHECK_SUM = 3,            /* free variant vs. XOR of single coins */
  COINNIM_CHECK_LOCAL_LAW = 4       /* rook closed form against itself */
} coinnim_check;

typedef struct coinnim_sweep_spec {
  coinnim_check check;
  coinnim_variant variant;
  int32_t bound;
  int32_t include_dropped_states;
  coinnim_push_rule push_rule;
} coinnim_sweep_spec;

typedef enum coinnim_format {
  COINNIM_FORMAT_JSON = 0,
  COINNIM_FORMAT_CSV = 1,
  COINNIM_FORMAT_TEXT = 2
} coinnim_format;

typedef struct coinnim_server_options {
  const char* host; /* NULL: 127.0.0.1 */
  int32_t port;     /* 0: any free port */
  int32_t heatmap_cap;
  const char* cors_origin; /* NULL: "*" */
} coinnim_server_options;

typedef struct coinnim_engine coinnim_engine;
typedef struct coinnim_report coinnim_report;
typedef struct coinnim_server coinnim_server;

COINNIM_API const char* coinnim_version(void);
COINNIM_API const char* coinnim_last_error(void);
COINNIM_API void coinnim_string_free(char* s);

COINNIM_API const char* coinnim_variant_name(coinnim_variant v);
COINNIM_API coinnim_status coinnim_parse_variant(const char* name, coinnim_variant* out);

/* memo_cap 0 means unlimited. */
COINNIM_API coinnim_status coinnim_engine_create(size_t memo_cap, coinnim_engine** out);
COINNIM_API void coinnim_engine_destroy(coinnim_engine* engine);

COINNIM_API coinnim_status coinnim_position_from_json(const char* json, coinnim_position* out);
/* Like coinnim_position_from_json, but "variant" may be omitted and defaults to
 * `variant`; a JSON variant that differs is COINNIM_ERR_INVALID_ARGUMENT. */
COINNIM_API coinnim_status coinnim_position_from_json_as(const char* json, coinnim_variant variant,
                                                         coinnim_position* out);
/* "w,x,y,z" or "c,r c,r"; all pieces on board. */
COINNIM_API coinnim_status coinnim_position_from_shorthand(coinnim_variant variant,
                                                           const char* text,
                                                           coinnim_position* out);
COINNIM_API coinnim_status coinnim_position_to_json(const coinnim_position* pos, char** out);

COINNIM_API int coinnim_validate(const coinnim_position* pos);

/* Writes up to `capacity` moves; *count always receives the full count.
 * Returns COINNIM_ERR_BUFFER_TOO_SMALL when capacity < *count. */
COINNIM_API coinnim_status coinnim_legal_moves(const coinnim_position* pos, coinnim_move* moves,
                                               size_t capacity, size_t* count);
COINNIM_API coinnim_status coinnim_apply_move(const coinnim_position* pos,
                                              const coinnim_move* move, coinnim_position* out);
COINNIM_API coinnim_status coinnim_is_terminal(const coinnim_position* pos, int* out);
COINNIM_API coinnim_status coinnim_move_to_string(const coinnim_move* move, char** out);

COINNIM_API coinnim_status coinnim_grundy(coinnim_engine* engine, const coinnim_position* pos,
                                          uint32_t* out);
COINNIM_API coinnim_status coinnim_best_moves(coinnim_engine* engine,
                                              const coinnim_position* pos, coinnim_move* moves,
                                              size_t capacity, size_t* count);

COINNIM_API coinnim_status coinnim_classify(const coinnim_position* pos,
                                            coinnim_classification* out);

COINNIM_API coinnim_status coinnim_verify(coinnim_engine* engine, const coinnim_sweep_spec* spec,
                                          coinnim_report** out);
COINNIM_API void coinnim_report_destroy(coinnim_report* report);
COINNIM_API uint64_t coinnim_report_total(const coinnim_report* report);
COINNIM_API size_t coinnim_report_mismatch_count(const coinnim_report* report);
COINNIM_API coinnim_status coinnim_report_render(const coinnim_report* report,
                                                 coinnim_format format, char** out);

/* Sweeps the push variant under every push-rule reading. *selected is set and
 * *found is nonzero when some reading gives zero mismatches. *summary_json
 * receives per-rule reports. */
COINNIM_API coinnim_status coinnim_calibrate_push(coinnim_engine* engine, int32_t bound,
                                                  coinnim_push_rule* selected, int* found,
                                                  char** summary_json);

/* CSV grundy/outcome table for every tuple within bound. */
COINNIM_API coinnim_status coinnim_export_table(coinnim_engine* engine, coinnim_variant variant,
                                                int32_t bound, char** csv);

/* Binds on create; run blocks until stop is called from another thread. */
COINNIM_API coinnim_status coinnim_server_create(coinnim_engine* engine,
                                                 const coinnim_server_options* options,
                                                 coinnim_server** out);
COINNIM_API int32_t coinnim_server_port(const coinnim_server* server);
COINNIM_API coinnim_status coinnim_server_run(coinnim_server* server);
COINNIM_API void coinnim_server_stop(coinnim_server* server);
COINNIM_API void coinnim_server_destroy(coinnim_server* server);

#ifdef __cplusplus
}
#endif

#endif /* COINNIM_COINNIM_H */
