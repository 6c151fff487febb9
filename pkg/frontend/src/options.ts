import { DEFAULT_OPTIONS, MODE_CATEGORIES } from './types';
import type { Metric, Mode, Tokenization } from './types';

export interface OptionValues {
  minFont: number;
  maxFont: number;
  topK: number;
  width: number;
  height: number;
  mode: Mode;
  metric: Metric;
  tokenization: Tokenization;
}

// The customization panel: visualization controls (font bounds, words per
// stream per step, view size), NLP controls (POS/NER with the three fixed
// sub-categories shown), and the text-characteristic choice.
export class OptionsPanel {
  readonly minFont: HTMLInputElement;
  readonly maxFont: HTMLInputElement;
  readonly topK: HTMLInputElement;
  readonly width: HTMLInputElement;
  readonly height: HTMLInputElement;
  readonly modeInputs: HTMLInputElement[];
  readonly metricInputs: HTMLInputElement[];
  readonly tokenizationSelect: HTMLSelectElement;
  private categoriesNote: HTMLElement;
  private message: HTMLElement;

  constructor(root: HTMLElement, private onChange: () => void) {
    const vis = fieldset(root, 'Visualization');
    this.minFont = slider(vis, 'opt-min-font', 'Min font size', 6, 60, DEFAULT_OPTIONS.minFont);
    this.maxFont = slider(vis, 'opt-max-font', 'Max font size', 6, 120, DEFAULT_OPTIONS.maxFont);
    this.topK = numberInput(vis, 'opt-top-k', 'Words per stream per step', 1, 50, DEFAULT_OPTIONS.topK);
    this.width = numberInput(vis, 'opt-width', 'View width', 100, 4000, DEFAULT_OPTIONS.width);
    this.height = numberInput(vis, 'opt-height', 'View height', 100, 4000, DEFAULT_OPTIONS.height);

    const nlp = fieldset(root, 'NLP');
    this.modeInputs = radios(nlp, 'opt-mode', [
      ['pos', 'POS tagging'],
      ['ner', 'NER'],
    ], DEFAULT_OPTIONS.mode);
    this.categoriesNote = document.createElement('div');
    this.categoriesNote.className = 'categories-note';
    this.categoriesNote.id = 'opt-categories';
    nlp.appendChild(this.categoriesNote);
    this.tokenizationSelect = select(nlp, 'opt-tokenize', 'Tokenization', [
      ['word', 'Words (fast)'],
      ['chunk', 'Noun chunks (slow)'],
    ], DEFAULT_OPTIONS.tokenization);

    const text = fieldset(root, 'Text characteristic');
    this.metricInputs = radios(text, 'opt-metric', [
      ['frequency', 'Frequency'],
      ['sudden', 'Sudden change'],
      ['tfidf', 'TF-IDF'],
    ], DEFAULT_OPTIONS.metric);

    this.message = document.createElement('div');
    this.message.className = 'options-message';
    this.message.id = 'opt-message';
    root.appendChild(this.message);

    this.updateCategoriesNote();
    root.addEventListener('input', () => {
      this.updateCategoriesNote();
      this.onChange();
    });
  }

  values(): OptionValues {
    return {
      minFont: Number(this.minFont.value),
      maxFont: Number(this.maxFont.value),
      topK: Number(this.topK.value),
      width: Number(this.width.value),
      height: Number(this.height.value),
      mode: checkedValue(this.modeInputs) as Mode,
      metric: checkedValue(this.metricInputs) as Metric,
      tokenization: this.tokenizationSelect.value as Tokenization,
    };
  }

  // Invalid bounds block the run and highlight the offending controls.
  validate(): boolean {
    const values = this.values();
    const bad = values.minFont > values.maxFont;
    this.minFont.classList.toggle('invalid', bad);
    this.maxFont.classList.toggle('invalid', bad);
    this.message.textContent = bad
      ? 'Minimum font size must not exceed maximum font size.'
      : '';
    return !bad;
  }

  private updateCategoriesNote(): void {
    const mode = checkedValue(this.modeInputs) as Mode;
    this.categoriesNote.textContent = `Categories: ${MODE_CATEGORIES[mode].join(', ')}`;
  }
}

function fieldset(root: HTMLElement, legendText: string): HTMLFieldSetElement {
  const set = document.createElement('fieldset');
  const legend = document.createElement('legend');
  legend.textContent = legendText;
  set.appendChild(legend);
  root.appendChild(set);
  return set;
}

function labelled(parent: HTMLElement, id: string, text: string): HTMLLabelElement {
  const label = document.createElement('label');
  label.htmlFor = id;
  label.textContent = text;
  parent.appendChild(label);
  return label;
}

function slider(
  parent: HTMLElement, id: string, text: string, min: number, max: number, value: number,
): HTMLInputElement {
  labelled(parent, id, text);
  const input = document.createElement('input');
  input.type = 'range';
  input.id = id;
  input.min = String(min);
  input.max = String(max);
  input.value = String(value);
  parent.appendChild(input);
  return input;
}

function numberInput(
  parent: HTMLElement, id: string, text: string, min: number, max: number, value: number,
): HTMLInputElement {
  labelled(parent, id, text);
  const input = document.createElement('input');
  input.type = 'number';
  input.id = id;
  input.min = String(min);
  input.max = String(max);
  input.value = String(value);
  parent.appendChild(input);
  return input;
}

function radios(
  parent: HTMLElement, name: string, entries: [string, string][], selected: string,
): HTMLInputElement[] {
  const inputs: HTMLInputElement[] = [];
  for (const [value, text] of entries) {
    const id = `${name}-${value}`;
    const input = document.createElement('input');
    input.type = 'radio';
    input.name = name;
    input.id = id;
    input.value = value;
    input.checked = value === selected;
    parent.appendChild(input);
    labelled(parent, id, text);
    inputs.push(input);
  }
  return inputs;
}

function select(
  parent: HTMLElement, id: string, text: string, entries: [string, string][], selected: string,
): HTMLSelectElement {
  labelled(parent, id, text);
  const dropdown = document.createElement('select');
  dropdown.id = id;
  for (const [value, label] of entries) {
    const option = document.createElement('option');
    option.value = value;
    option.textContent = label;
    option.selected = value === selected;
    dropdown.appendChild(option);
  }
  parent.appendChild(dropdown);
  return dropdown;
}

function checkedValue(inputs: HTMLInputElement[]): string {
  const hit = inputs.find((input) => input.checked);
  return hit ? hit.value : inputs[0].value;
}
