import { PipelineError } from './client';
import type { PipelineClient } from './client';
import { OptionsPanel } from './options';
import { renderPreview, renderPreviewError } from './preview';
import type { LayoutDocument, RunOptions, TableFormat } from './types';
import { renderDroppedPanel, renderWordStream } from './wordstream';

const MAX_FILE_BYTES = 20 * 1024 * 1024;
export const RERUN_DEBOUNCE_MS = 250;

interface SessionState {
  fileName: string | null;
  fileBytes: Uint8Array | null;
  format: TableFormat;
  result: LayoutDocument | null;
}

// Wires the three panels together. Option edits invalidate the current
// result and schedule a debounced re-run; only the latest run's result is
// ever shown (earlier in-flight responses are discarded).
export class App {
  readonly state: SessionState = {
    fileName: null,
    fileBytes: null,
    format: 'csv',
    result: null,
  };
  readonly options: OptionsPanel;
  private generation = 0;
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;
  private timeSelect: HTMLSelectElement;
  private textSelect: HTMLSelectElement;
  private previewPane: HTMLElement;
  private viewPane: HTMLElement;
  private droppedPane: HTMLElement;
  private status: HTMLElement;

  constructor(root: HTMLElement, private client: PipelineClient) {
    this.previewPane = must(root, '#preview');
    this.viewPane = must(root, '#view');
    this.droppedPane = must(root, '#dropped');
    this.status = must(root, '#status');
    this.timeSelect = must(root, '#time-col') as HTMLSelectElement;
    this.textSelect = must(root, '#text-col') as HTMLSelectElement;
    this.options = new OptionsPanel(must(root, '#options'), () => this.scheduleRun());

    const fileInput = must(root, '#file-input') as HTMLInputElement;
    fileInput.addEventListener('change', () => {
      const file = fileInput.files?.[0];
      if (file) void this.loadUpload(file);
    });
    must(root, '#load-sample').addEventListener('click', () => void this.loadSample());
    this.timeSelect.addEventListener('change', () => this.scheduleRun());
    this.textSelect.addEventListener('change', () => this.scheduleRun());
  }

  async loadSample(): Promise<void> {
    this.setStatus('Loading sample dataset…');
    const bytes = await this.client.sample();
    await this.loadBytes('sample.csv', bytes, 'csv');
  }

  async loadUpload(file: File): Promise<void> {
    if (file.size > MAX_FILE_BYTES) {
      this.setStatus(`File too large (limit ${MAX_FILE_BYTES / 1024 / 1024} MB).`, true);
      return;
    }
    const bytes = new Uint8Array(await file.arrayBuffer());
    const format: TableFormat = file.name.toLowerCase().endsWith('.tsv') ? 'tsv' : 'csv';
    await this.loadBytes(file.name, bytes, format);
  }

  async loadBytes(name: string, bytes: Uint8Array, format: TableFormat): Promise<void> {
    this.state.fileName = name;
    this.state.fileBytes = bytes;
    this.state.format = format;
    this.state.result = null;
    try {
      const preview = await this.client.preview(bytes, format);
      renderPreview(this.previewPane, preview);
      this.populateColumns(preview.headers);
      this.setStatus(`Loaded ${name}.`);
      this.scheduleRun();
    } catch (error) {
      renderPreviewError(this.previewPane, describe(error));
      this.setStatus(describe(error), true);
    }
  }

  // Re-run soon, coalescing bursts of option edits into one request.
  scheduleRun(): void {
    if (!this.state.fileBytes) return;
    if (!this.options.validate()) return;
    if (this.debounceTimer !== null) clearTimeout(this.debounceTimer);
    this.debounceTimer = setTimeout(() => {
      this.debounceTimer = null;
      void this.runNow();
    }, RERUN_DEBOUNCE_MS);
  }

  async runNow(): Promise<void> {
    const bytes = this.state.fileBytes;
    if (!bytes) return;
    if (!this.options.validate()) return;
    const generation = ++this.generation;
    const options = this.currentOptions();
    this.setStatus('Running pipeline…');
    try {
      const result = await this.client.run(options, bytes);
      if (generation !== this.generation) return; // a newer run superseded this one
      this.state.result = result;
      renderWordStream(this.viewPane, result);
      renderDroppedPanel(this.droppedPane, result);
      this.setStatus(
        `${result.words.length} words across ${result.timeLabels.length} time boxes.`,
      );
    } catch (error) {
      if (generation !== this.generation) return;
      this.setStatus(describe(error), true);
    }
  }

  currentOptions(): RunOptions {
    return {
      timeCol: this.timeSelect.value,
      textCol: this.textSelect.value,
      format: this.state.format,
      ...this.options.values(),
    };
  }

  private populateColumns(headers: string[]): void {
    for (const dropdown of [this.timeSelect, this.textSelect]) {
      dropdown.replaceChildren();
      for (const header of headers) {
        const option = document.createElement('option');
        option.value = header;
        option.textContent = header;
        dropdown.appendChild(option);
      }
    }
    this.timeSelect.value = headers[0];
    this.textSelect.value = headers[headers.length - 1];
  }

  private setStatus(message: string, isError = false): void {
    this.status.textContent = message;
    this.status.classList.toggle('error', isError);
  }
}

function must(root: HTMLElement, selector: string): HTMLElement {
  const el = root.querySelector(selector);
  if (!el) throw new Error(`missing element: ${selector}`);
  return el as HTMLElement;
}

function describe(error: unknown): string {
  if (error instanceof PipelineError) return `${error.stage}: ${error.message}`;
  return error instanceof Error ? error.message : String(error);
}
