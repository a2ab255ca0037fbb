// sort records by key
typedef struct {
    int key;
    int id;
} entry;

int main()
{
    entry data[500], temp;
    int num;
    scanf("%d", &num);
    for (int p = 0; p < num; p++) {
        scanf("%d", &data[p].key);
        data[p].id = p + 1;
    }
    for (int p = 0; p < num - 1; p++) {
                for (int j = 0; j < num - 1 - p; j++) {
                    if (data[j].key > data[j + 1].key) {
                                    temp = data[j];
                                    data[j] = data[j + 1];
                                    data[j + 1] = temp;
                                }
                }
    }
    for (int p = 0; p < num; p++) {
        printf("%d ", data[p].id);
    }
    return 0;
}
