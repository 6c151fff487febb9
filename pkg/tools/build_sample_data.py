#!/usr/bin/env python3
"""Regenerate the bundled demo dataset (data/sample.csv).

A synthetic 9-week student journal, 63 rows (7 per week), with a designed
entity profile: google mentions dominate every week, microsoft jumps from
zero in week 6, github ramps up in weeks 7-9, and myspace appears only in
week 9. Run from the repo root:

    python tools/build_sample_data.py
"""

from __future__ import annotations

import csv
import io
import random
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "wordstream" / "data" / "sample.csv"

WEEKS = 9
ROWS_PER_WEEK = 7

# Entity mentions per week, spread over that week's rows.
ENTITY_PLAN = {
    "google": [21, 21, 21, 21, 21, 21, 21, 21, 21],
    "microsoft": [0, 0, 0, 0, 0, 12, 6, 5, 4],
    "github": [0, 0, 0, 0, 0, 0, 5, 7, 6],
    "myspace": [0, 0, 0, 0, 0, 0, 0, 0, 3],
    "alice": [3, 2, 3, 2, 3, 2, 3, 2, 3],
    "bob": [1, 2, 1, 2, 1, 2, 1, 2, 1],
    "emma": [0, 1, 0, 1, 0, 1, 0, 1, 0],
    "texas": [2, 2, 1, 2, 1, 2, 1, 2, 2],
    "boston": [1, 0, 1, 1, 0, 1, 1, 0, 1],
    "london": [0, 1, 0, 0, 1, 0, 0, 1, 0],
}

PROMPTS = [
    "What did you study this week?",
    "Which tools helped you most?",
    "What was the hardest part of the week?",
    "What did you build or write?",
    "Who did you work with?",
    "What would you change next week?",
    "What surprised you this week?",
]

OPENERS = [
    "I studied the lecture notes and worked on my project.",
    "We studied hard for the quiz and compared our answers.",
    "I am studying the reading list and writing a short essay.",
    "The homework was difficult but the examples helped.",
    "I wrote a long summary of the chapter and revised my notes.",
    "Our group finished the assignment early and reviewed the data.",
    "I practiced the exercises and learned a useful technique.",
    "The lecture covered interesting ideas about data and design.",
    "I read two articles and collected sources for the report.",
    "We tested our code and fixed a confusing error.",
    "I made a plan for the exam and followed the schedule.",
    "The discussion helped me understand the theory better.",
]

FILLERS = [
    "My notes grew longer every day.",
    "The project felt easier after practice.",
    "I asked a question in class and got a clear answer.",
    "The deadline pushed us to work faster.",
    "A classmate shared a helpful example.",
    "The results looked great in the final chart.",
    "I cleaned the data before the analysis.",
    "The essay needed one more revision.",
    "We presented our findings to the class.",
    "The quiz covered the whole chapter.",
]

ENTITY_SENTENCES = {
    "google": [
        "I searched on google for examples.",
        "We used google docs for the draft.",
        "A google search found the answer quickly.",
    ],
    "microsoft": [
        "We tried microsoft word for the report.",
        "The lab machines run microsoft software.",
        "I opened the sheet in microsoft excel.",
    ],
    "github": [
        "Our code lives on github now.",
        "I pushed the project to github.",
        "We reviewed changes on github together.",
    ],
    "myspace": [
        "Someone mentioned myspace in a history of the web.",
        "We laughed about an old myspace page.",
    ],
    "alice": ["alice explained the tricky step.", "I compared notes with alice."],
    "bob": ["bob joined our study group.", "bob shared his outline."],
    "emma": ["emma presented her draft."],
    "texas": ["My cousin visited from texas.", "The case study was set in texas."],
    "boston": ["The conference was in boston."],
    "london": ["One article came from a london lab."],
}


def build() -> None:
    rng = random.Random(42)
    rows = []
    for week in range(1, WEEKS + 1):
        sentences_per_row: list[list[str]] = [[] for _ in range(ROWS_PER_WEEK)]
        for entity, plan in ENTITY_PLAN.items():
            count = plan[week - 1]
            options = ENTITY_SENTENCES[entity]
            for i in range(count):
                row = i % ROWS_PER_WEEK
                sentences_per_row[row].append(options[i % len(options)])
        for r in range(ROWS_PER_WEEK):
            body = [OPENERS[(week * ROWS_PER_WEEK + r) % len(OPENERS)]]
            body.extend(sentences_per_row[r])
            body.append(FILLERS[(week + r * 3) % len(FILLERS)])
            rng.shuffle(body)
            rows.append(
                {
                    "Week": f"Week {week}",
                    "Prompt Text": PROMPTS[r % len(PROMPTS)],
                    "Response Text": " ".join(body),
                }
            )

    assert len(rows) == 63
    buf = io.StringIO()
    writer = csv.DictWriter(
        buf, fieldnames=["Week", "Prompt Text", "Response Text"], lineterminator="\n"
    )
    writer.writeheader()
    writer.writerows(rows)
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(buf.getvalue(), encoding="utf-8")

    counts = {e: sum(p) for e, p in ENTITY_PLAN.items()}
    print(f"wrote {OUT} ({len(rows)} rows), entity totals: {counts}")


if __name__ == "__main__":
    build()
