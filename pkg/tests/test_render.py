import json
import xml.etree.ElementTree as ET

import jsonschema
import pytest
from oracles import random_layout_dataset

from wordstream.layout import compute_layers, place_words
from wordstream.metrics import BoxSelection
from wordstream.render import canonical_json, document, emit_json, emit_svg, load_schema

SVG_NS = "{http://www.w3.org/2000/svg}"


def build_result(seed=4):
    weights, selections, config = random_layout_dataset(seed)
    layers = compute_layers(weights, config)
    return place_words(layers, selections, config), weights, selections


def minimal_result():
    from wordstream.layout import LayoutConfig

    config = LayoutConfig(min_font=10, max_font=20, top_k=3, width=600, height=300)
    layers = compute_layers({"Noun": [4.0, 4.0]}, config)
    selections = [BoxSelection(0, "Noun", [("study", 3.0)]), BoxSelection(1, "Noun", [])]
    return place_words(layers, selections, config, time_labels=["W1", "W2"])


class TestSvg:
    def test_well_formed_xml(self):
        result, _w, _s = build_result()
        ET.fromstring(emit_svg(result))

    def test_empty_words_still_well_formed(self):
        result = minimal_result()
        result.words.clear()
        root = ET.fromstring(emit_svg(result))
        assert root.tag == f"{SVG_NS}svg"

    def test_element_counts(self):
        result = minimal_result()
        assert len(result.words) == 1
        root = ET.fromstring(emit_svg(result))
        paths = root.findall(f".//{SVG_NS}path")
        words = [
            e for e in root.iter(f"{SVG_NS}text") if e.get("class") == "word"
        ]
        axis = [
            e for e in root.iter(f"{SVG_NS}text") if e.get("class") == "axis-label"
        ]
        assert len(paths) == 1
        assert len(words) == 1
        assert len(axis) == 2  # one per time box

    def test_viewbox_matches_viewport(self):
        result = minimal_result()
        root = ET.fromstring(emit_svg(result))
        assert root.get("viewBox") == "0 0 600 300"

    def test_word_coordinates_match_layout(self):
        result, _w, _s = build_result(8)
        root = ET.fromstring(emit_svg(result))
        texts = [e for e in root.iter(f"{SVG_NS}text") if e.get("class") == "word"]
        assert len(texts) == len(result.words)
        for element, word in zip(texts, result.words):
            assert float(element.get("x")) == pytest.approx(word.x, abs=0.01)
            assert float(element.get("y")) == pytest.approx(word.y + word.h, abs=0.01)
            assert float(element.get("font-size")) == pytest.approx(
                word.font_size, abs=0.01
            )
            assert element.text == word.term

    def test_axis_labels_at_column_centers(self):
        result = minimal_result()
        root = ET.fromstring(emit_svg(result))
        axis = [e for e in root.iter(f"{SVG_NS}text") if e.get("class") == "axis-label"]
        assert [e.text for e in axis] == ["W1", "W2"]
        assert float(axis[0].get("x")) == pytest.approx(150.0, abs=0.01)
        assert float(axis[1].get("x")) == pytest.approx(450.0, abs=0.01)

    def test_layer_path_coordinates_match_samples(self):
        result = minimal_result()
        root = ET.fromstring(emit_svg(result))
        path = root.find(f".//{SVG_NS}path")
        d = path.get("d")
        layer = result.layers[0]
        first_top = f"M {result.x_samples[0]:.2f} {layer.top[0]:.2f}".replace(".00", "")
        assert d.startswith(first_top.split()[0])
        # first moveto matches the first top sample to 2 decimals
        parts = d.split()
        assert float(parts[1]) == pytest.approx(result.x_samples[0], abs=0.01)
        assert float(parts[2]) == pytest.approx(layer.top[0], abs=0.01)

    def test_escaping(self):
        result = minimal_result()
        object.__setattr__(result.words[0], "term", 'a<b&"c')
        root = ET.fromstring(emit_svg(result))
        word = [e for e in root.iter(f"{SVG_NS}text") if e.get("class") == "word"][0]
        assert word.text == 'a<b&"c'


class TestJson:
    def test_serialize_parse_serialize_identical(self):
        result, _w, _s = build_result(5)
        text = emit_json(result)
        again = canonical_json(json.loads(text))
        assert again == text

    def test_two_runs_identical_bytes(self):
        a, _w2, _s2 = build_result(6)
        b, _w3, _s3 = build_result(6)
        assert emit_json(a) == emit_json(b)

    def test_dropped_entries_have_reasons(self):
        from wordstream.layout import LayoutConfig

        config = LayoutConfig(min_font=10, max_font=20, top_k=3, width=300, height=150)
        layers = compute_layers({"Noun": [5.0, 0.0]}, config)
        selections = [
            BoxSelection(0, "Noun", [("data", 2.0)]),
            BoxSelection(1, "Noun", [("ghost", 1.0)]),
        ]
        result = place_words(layers, selections, config)
        doc = json.loads(emit_json(result))
        assert doc["dropped"] == [
            {"term": "ghost", "category": "Noun", "box": 1, "reason": "no-fit"}
        ]

    def test_numbers_at_most_6_fraction_digits(self):
        result, _w, _s = build_result(7)
        text = emit_json(result)

        def check(value):
            if isinstance(value, float):
                assert value == round(value, 6)
            elif isinstance(value, dict):
                for v in value.values():
                    check(v)
            elif isinstance(value, list):
                for v in value:
                    check(v)

        check(json.loads(text))

    def test_key_order_fixed(self):
        result = minimal_result()
        doc = json.loads(emit_json(result))
        assert list(doc) == [
            "schema", "config", "viewport", "timeLabels", "xSamples",
            "layers", "words", "dropped",
        ]
        assert list(doc["words"][0]) == [
            "term", "category", "box", "fontSize", "x", "y", "w", "h", "value", "color",
        ]

    def test_words_ordered_by_box_category_rank(self):
        result, _w, _s = build_result(9)
        doc = json.loads(emit_json(result))
        order = {layer["category"]: i for i, layer in enumerate(doc["layers"])}
        keys = [(w["box"], order[w["category"]]) for w in doc["words"]]
        assert keys == sorted(keys)

    def test_validates_against_shipped_schema(self):
        schema = load_schema()
        for seed in (1, 4, 13):
            result, _w, _s = build_result(seed)
            jsonschema.validate(json.loads(emit_json(result)), schema)

    def test_minimal_doc_validates(self):
        schema = load_schema()
        jsonschema.validate(json.loads(emit_json(minimal_result())), schema)

    def test_schema_rejects_corrupt_document(self):
        schema = load_schema()
        doc = json.loads(emit_json(minimal_result()))
        doc["words"].append({"term": "bad"})
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate(doc, schema)


class TestColors:
    def test_layer_colors_follow_palette(self):
        result, _w, _s = build_result(10)
        doc = document(result)
        colors = [layer["color"] for layer in doc["layers"]]
        assert colors == ["#4e79a7", "#f28e2b", "#59a14f"][: len(colors)]

    def test_word_color_darkens_with_rank(self):
        from wordstream.render import word_color

        first = word_color(0, 0)
        later = word_color(0, 3)
        assert first == "#4e79a7"
        assert later != first
        assert int(later[1:3], 16) < int(first[1:3], 16)
