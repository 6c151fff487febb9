import type { LayoutDocument } from './types';

const SVG_NS = 'http://www.w3.org/2000/svg';

function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

// Draws the WordStream exactly as laid out: every coordinate, size, and
// color is taken verbatim from the layout document.
export function renderWordStream(container: HTMLElement, doc: LayoutDocument): SVGSVGElement {
  const { width, height } = doc.viewport;
  const svg = svgElement('svg', {
    viewBox: `0 0 ${width} ${height}`,
    width: String(width),
    height: String(height),
    class: 'wordstream',
  });

  const layers = svgElement('g', { class: 'layers' });
  for (const layer of doc.layers) {
    const forward = doc.xSamples.map((x, i) => `${i === 0 ? 'M' : 'L'} ${x} ${layer.top[i]}`);
    const back = [...doc.xSamples.keys()]
      .reverse()
      .map((i) => `L ${doc.xSamples[i]} ${layer.bottom[i]}`);
    const path = svgElement('path', {
      class: 'layer',
      d: `${forward.join(' ')} ${back.join(' ')} Z`,
      fill: layer.color,
      'fill-opacity': '0.35',
      'data-category': layer.category,
    });
    layers.appendChild(path);
  }
  svg.appendChild(layers);

  const words = svgElement('g', {
    class: 'words',
    'font-family': 'Helvetica, Arial, sans-serif',
  });
  for (const word of doc.words) {
    const text = svgElement('text', {
      class: 'word',
      x: String(word.x),
      y: String(word.y + word.h),
      'font-size': String(word.fontSize),
      fill: word.color,
      'data-category': word.category,
      'data-box': String(word.box),
    });
    text.textContent = word.term;
    const tip = svgElement('title');
    tip.textContent =
      `${word.term} (${word.category}) — ${doc.timeLabels[word.box]}: ` +
      `${doc.config.metric} ${formatValue(word.value)}`;
    text.appendChild(tip);
    words.appendChild(text);
  }
  svg.appendChild(words);

  const axis = svgElement('g', {
    class: 'axis',
    'font-family': 'Helvetica, Arial, sans-serif',
    'font-size': '12',
  });
  const n = doc.timeLabels.length;
  doc.timeLabels.forEach((label, t) => {
    const tick = svgElement('text', {
      class: 'axis-label',
      x: String(((t + 0.5) * width) / n),
      y: String(height - 6),
      'text-anchor': 'middle',
    });
    tick.textContent = label;
    axis.appendChild(tick);
  });
  svg.appendChild(axis);

  container.replaceChildren(svg);
  return svg;
}

// Words the layout could not fit, in a collapsible list under the view.
export function renderDroppedPanel(container: HTMLElement, doc: LayoutDocument): void {
  container.replaceChildren();
  if (doc.dropped.length === 0) return;

  const details = document.createElement('details');
  details.className = 'dropped-panel';
  const summary = document.createElement('summary');
  summary.textContent = `${doc.dropped.length} words did not fit`;
  details.appendChild(summary);
  const list = document.createElement('ul');
  for (const item of doc.dropped) {
    const entry = document.createElement('li');
    entry.textContent =
      `${item.term} (${item.category}, ${doc.timeLabels[item.box]}): ${item.reason}`;
    list.appendChild(entry);
  }
  details.appendChild(list);
  container.appendChild(details);
}

function formatValue(value: number): string {
  return Number.isInteger(value) ? String(value) : value.toFixed(3);
}
