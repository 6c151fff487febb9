import type { PreviewDocument } from './types';

// Renders the parsed-table preview: headers plus the first rows the
// service returned, with the true total row count in the caption.
export function renderPreview(container: HTMLElement, preview: PreviewDocument): void {
  container.replaceChildren();

  const caption = document.createElement('div');
  caption.className = 'preview-caption';
  const shown = preview.rows.length;
  caption.textContent =
    shown < preview.totalRows
      ? `Showing ${shown} of ${preview.totalRows} rows`
      : `${preview.totalRows} rows`;
  if (preview.raggedRows > 0) {
    caption.textContent += ` (${preview.raggedRows} malformed rows dropped)`;
  }
  container.appendChild(caption);

  const table = document.createElement('table');
  table.className = 'preview-table';
  const head = table.createTHead().insertRow();
  for (const header of preview.headers) {
    const cell = document.createElement('th');
    cell.textContent = header;
    head.appendChild(cell);
  }
  const body = table.createTBody();
  for (const row of preview.rows) {
    const tr = body.insertRow();
    for (const value of row) {
      tr.insertCell().textContent = value;
    }
  }
  container.appendChild(table);
}

export function renderPreviewError(container: HTMLElement, message: string): void {
  container.replaceChildren();
  const note = document.createElement('div');
  note.className = 'preview-error';
  note.textContent = message;
  container.appendChild(note);
}
