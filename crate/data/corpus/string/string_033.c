int main()
{
    char word[1000];
    int len;
    scanf("%s", word);
    for (len = 0; word[len]; len++)
        ;
    printf("%d\n", len);
    return 0;
}
