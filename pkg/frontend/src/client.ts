import type { LayoutDocument, PreviewDocument, RunOptions, TableFormat } from './types';

// The only boundary to the pipeline: every visual quantity the UI shows
// comes back through this interface, never from UI-side recomputation.
export interface PipelineClient {
  sample(): Promise<Uint8Array>;
  preview(fileBytes: Uint8Array, format: TableFormat): Promise<PreviewDocument>;
  run(options: RunOptions, fileBytes: Uint8Array): Promise<LayoutDocument>;
}

export class PipelineError extends Error {
  constructor(public stage: string, message: string) {
    super(message);
  }
}

export class HttpPipelineClient implements PipelineClient {
  constructor(private baseUrl: string = '') {}

  async sample(): Promise<Uint8Array> {
    const response = await fetch(`${this.baseUrl}/api/sample`);
    if (!response.ok) throw new PipelineError('service', `sample failed: ${response.status}`);
    return new Uint8Array(await response.arrayBuffer());
  }

  async preview(fileBytes: Uint8Array, format: TableFormat): Promise<PreviewDocument> {
    const body = new FormData();
    body.append('file', new Blob([fileBytes as BlobPart]), 'upload');
    body.append('format', format);
    const response = await fetch(`${this.baseUrl}/api/preview`, { method: 'POST', body });
    return this.decode<PreviewDocument>(response);
  }

  async run(options: RunOptions, fileBytes: Uint8Array): Promise<LayoutDocument> {
    const body = new FormData();
    body.append('file', new Blob([fileBytes as BlobPart]), 'upload');
    body.append('options', JSON.stringify(options));
    const response = await fetch(`${this.baseUrl}/api/run`, { method: 'POST', body });
    return this.decode<LayoutDocument>(response);
  }

  private async decode<T>(response: Response): Promise<T> {
    const payload = await response.json();
    if (!response.ok) {
      throw new PipelineError(payload.stage ?? 'service', payload.message ?? 'request failed');
    }
    return payload as T;
  }
}
