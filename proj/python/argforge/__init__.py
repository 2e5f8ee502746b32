"""Aspect-controlled argument corpus construction and evaluation."""

from argforge._core import (
    AspectSpan,
    BaselineClient,
    aspect_presence,
    bio_decode,
    bio_encode,
    build_counter_codes,
    eval_query,
    extract_candidates,
    flip_stance,
    heuristic_score,
    meteor_lite,
    normalize_text,
    parse_query,
    porter_stem,
    render_control_code,
    rouge_l,
    split_sentences,
    stem_key,
    token_f1_macro,
    tokenize,
)

__all__ = [
    "AspectSpan",
    "BaselineClient",
    "aspect_presence",
    "bio_decode",
    "bio_encode",
    "build_counter_codes",
    "eval_query",
    "extract_candidates",
    "flip_stance",
    "heuristic_score",
    "meteor_lite",
    "normalize_text",
    "parse_query",
    "porter_stem",
    "render_control_code",
    "rouge_l",
    "split_sentences",
    "stem_key",
    "token_f1_macro",
    "tokenize",
]
