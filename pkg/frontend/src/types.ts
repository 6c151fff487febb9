// Mirrors the layout-schema/v1 document emitted by the pipeline service.

export type Mode = 'pos' | 'ner';
export type Metric = 'frequency' | 'sudden' | 'tfidf';
export type Tokenization = 'word' | 'chunk';
export type TableFormat = 'csv' | 'tsv';

export interface RunOptions {
  timeCol: string;
  textCol: string;
  format: TableFormat;
  minFont: number;
  maxFont: number;
  topK: number;
  width: number;
  height: number;
  mode: Mode;
  metric: Metric;
  tokenization: Tokenization;
}

export interface LayoutLayer {
  category: string;
  color: string;
  weights: number[];
  top: number[];
  bottom: number[];
}

export interface LayoutWord {
  term: string;
  category: string;
  box: number;
  fontSize: number;
  x: number;
  y: number;
  w: number;
  h: number;
  value: number;
  color: string;
}

export interface DroppedWord {
  term: string;
  category: string;
  box: number;
  reason: string;
}

export interface LayoutDocument {
  schema: 'layout-schema/v1';
  config: {
    minFont: number;
    maxFont: number;
    topK: number;
    width: number;
    height: number;
    mode: Mode;
    metric: Metric;
    tokenization: Tokenization;
  };
  viewport: { width: number; height: number };
  timeLabels: string[];
  xSamples: number[];
  layers: LayoutLayer[];
  words: LayoutWord[];
  dropped: DroppedWord[];
}

export interface PreviewDocument {
  headers: string[];
  rows: string[][];
  totalRows: number;
  raggedRows: number;
  decodeReplacements: number;
}

export const MODE_CATEGORIES: Record<Mode, [string, string, string]> = {
  pos: ['Noun', 'Verb', 'Adjective'],
  ner: ['Person', 'Place', 'Organization'],
};

export const DEFAULT_OPTIONS: Omit<RunOptions, 'timeCol' | 'textCol' | 'format'> = {
  minFont: 12,
  maxFont: 42,
  topK: 8,
  width: 1200,
  height: 600,
  mode: 'pos',
  metric: 'frequency',
  tokenization: 'word',
};
